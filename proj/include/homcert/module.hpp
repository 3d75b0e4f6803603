#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcert/algebra.hpp"

namespace homcert {

// Finite-dimensional left module: action matrices rho(e_1)..rho(e_d), one per
// algebra basis element. The module axiom rho(e_i) rho(e_j) = sum_k c[i][j][k]
// rho(e_k) and rho(1) = id are checked at construction.
class Module {
public:
    Module(AlgebraPtr algebra, std::vector<Mat> action, std::string name = "");

    static Module zero(AlgebraPtr algebra);
    // The regular module A (left multiplication on itself).
    static Module regular(AlgebraPtr algebra);
    // Free module A^k.
    static Module free(AlgebraPtr algebra, int k);

    const AlgebraPtr& algebra() const { return algebra_; }
    const PrimeField& field() const { return algebra_->field(); }
    int dim() const { return dim_; }
    const Mat& action(int i) const { return action_[i]; }
    const std::vector<Mat>& actions() const { return action_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    // rho(x) for an arbitrary element x in coordinates.
    Mat act(const std::vector<int>& x) const;

    bool same_presentation(const Module& o) const;

private:
    AlgebraPtr algebra_;
    int dim_;
    std::vector<Mat> action_;
    std::string name_;
};

// Module homomorphism as an intertwining matrix (target.dim x source.dim).
class ModuleMap {
public:
    ModuleMap(Module source, Module target, Mat matrix);

    const Module& source() const { return source_; }
    const Module& target() const { return target_; }
    const Mat& matrix() const { return matrix_; }

    bool is_injective() const;
    bool is_surjective() const;
    bool is_zero() const { return matrix_.is_zero(); }

    static ModuleMap zero(const Module& source, const Module& target);
    static ModuleMap identity(const Module& m);

private:
    Module source_, target_;
    Mat matrix_;
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f

// True iff matrix * rho_src(e_i) = rho_tgt(e_i) * matrix for all i.
bool intertwines(const Module& source, const Module& target, const Mat& matrix);

// Short exact sequence 0 -> B -i-> E -q-> A -> 0.
struct ShortExactSequence {
    ModuleMap i;  // mono
    ModuleMap q;  // epi
    ShortExactSequence(ModuleMap i_, ModuleMap q_);
};

// A submodule of M presented by a basis matrix (columns span an
// action-stable subspace). check_stable() fails with NotActionStable.
struct Submodule {
    Mat basis;  // M.dim x s, full column rank
};

// Closure of the given spanning vectors under the action; returns a canonical
// (RREF-pivot) basis.
Submodule submodule_generated(const Module& m, const Mat& vectors);

// Is span(basis) action-stable in m?
bool is_action_stable(const Module& m, const Mat& basis);

// Module structure on an action-stable subspace, with the inclusion map.
struct SubmoduleObject {
    Module module;
    ModuleMap inclusion;
};
SubmoduleObject submodule_object(const Module& m, const Mat& basis, std::string name = "");

// Quotient by an action-stable subspace, with the projection map.
struct QuotientObject {
    Module module;
    ModuleMap projection;
};
QuotientObject quotient(const Module& m, const Mat& sub_basis, std::string name = "");

// Kernel / image of a map, as submodule objects of source / target.
SubmoduleObject kernel(const ModuleMap& f);
SubmoduleObject image(const ModuleMap& f);
QuotientObject cokernel(const ModuleMap& f);

struct DirectSum {
    Module total;
    std::vector<ModuleMap> inclusions;
    std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const std::vector<Module>& parts);

// F_p-basis of Hom_A(M, N), each element a ModuleMap. Deterministic order.
std::vector<ModuleMap> hom_space(const Module& m, const Module& n);

// Surjection A^k -> M determined by a generating set (default: the standard
// basis of M). Column j*d+i of the matrix is rho(e_i) * g_j.
ModuleMap free_cover(const Module& m, std::optional<Mat> generators = std::nullopt);

// Section witness s with cover.matrix * s = id, if M is projective.
std::optional<Mat> projective_section(const ModuleMap& cover);

struct ProjectiveWitness {
    ModuleMap cover;
    Mat section;
};
// True iff a section of the free cover exists; the witness is returned.
std::optional<ProjectiveWitness> is_projective(const Module& m);

// Random-instance support: conjugate a module by an invertible change of
// basis (an isomorphic copy with scrambled coordinates).
Module conjugate(const Module& m, const Mat& invertible, const Mat& inverse);

}  // namespace homcert
