#pragma once

#include <memory>
#include <string>
#include <vector>

#include "homcert/matrix.hpp"

namespace homcert {

// Dimension cap on loaded domain objects (algebras, modules, complexes).
// Internal scratch matrices (Hom/Ext solves) are exempt.
int max_object_dim();
void set_max_object_dim(int cap);

// A finite-dimensional unital associative F_p-algebra given by structure
// constants: e_i * e_j = sum_k c[i][j][k] e_k. Associativity, the unit law,
// and (when given) the idempotent laws are checked exhaustively at
// construction.
class Algebra {
public:
    Algebra(PrimeField field, std::vector<std::string> basis_names,
            std::vector<int> structure_constants,  // flattened d*d*d, c[i][j][k]
            std::vector<int> unit,
            std::vector<std::vector<int>> idempotents = {},
            std::string name = "");

    const PrimeField& field() const { return field_; }
    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    const std::vector<int>& unit() const { return unit_; }
    const std::vector<std::vector<int>>& idempotents() const { return idempotents_; }
    int c(int i, int j, int k) const {
        return sc_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
    }
    const std::vector<int>& structure_constants() const { return sc_; }

    // Product of two coordinate vectors.
    std::vector<int> multiply(const std::vector<int>& x, const std::vector<int>& y) const;

    // Left multiplication by basis element e_i, as a matrix: column j holds
    // the coordinates of e_i * e_j. These are the action matrices of the
    // regular module.
    const Mat& left_mult(int i) const { return left_mult_[i]; }
    // Right multiplication by an arbitrary element (commutes with the left
    // action; used to split the regular module along idempotents).
    Mat right_mult(const std::vector<int>& x) const;

    bool same_table(const Algebra& o) const;

private:
    void validate() const;

    PrimeField field_;
    int dim_;
    std::string name_;
    std::vector<std::string> basis_names_;
    std::vector<int> sc_;
    std::vector<int> unit_;
    std::vector<std::vector<int>> idempotents_;
    std::vector<Mat> left_mult_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Structure constants transposed in the first two indices. Right modules are
// realized as left modules over the opposite algebra.
AlgebraPtr opposite(const Algebra& a);

}  // namespace homcert
