#include "homcert/algebra.hpp"

namespace homcert {

static int g_max_object_dim = 64;
int max_object_dim() { return g_max_object_dim; }
void set_max_object_dim(int cap) {
    require(cap >= 1, "MalformedSpec", "dimension cap must be positive");
    g_max_object_dim = cap;
}

Algebra::Algebra(PrimeField field, std::vector<std::string> basis_names,
                 std::vector<int> structure_constants, std::vector<int> unit,
                 std::vector<std::vector<int>> idempotents, std::string name)
    : field_(field),
      dim_(static_cast<int>(basis_names.size())),
      name_(std::move(name)),
      basis_names_(std::move(basis_names)),
      sc_(std::move(structure_constants)),
      unit_(std::move(unit)),
      idempotents_(std::move(idempotents)) {
    require(dim_ >= 1, "MalformedSpec", "algebra must have positive dimension");
    require(dim_ <= max_object_dim(), "MalformedSpec", "algebra dimension exceeds cap");
    require(sc_.size() == static_cast<size_t>(dim_) * dim_ * dim_, "MalformedSpec",
            "structure constant array has wrong size");
    require(unit_.size() == static_cast<size_t>(dim_), "MalformedSpec",
            "unit vector has wrong size");
    for (auto& v : sc_) v = field_.reduce(v);
    for (auto& v : unit_) v = field_.reduce(v);
    for (auto& e : idempotents_) {
        require(e.size() == static_cast<size_t>(dim_), "BadIdempotents",
                "idempotent vector has wrong size");
        for (auto& v : e) v = field_.reduce(v);
    }
    left_mult_.reserve(dim_);
    for (int i = 0; i < dim_; ++i) {
        Mat L(field_, dim_, dim_);
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) L.at(k, j) = c(i, j, k);
        left_mult_.push_back(std::move(L));
    }
    validate();
}

std::vector<int> Algebra::multiply(const std::vector<int>& x, const std::vector<int>& y) const {
    require(x.size() == static_cast<size_t>(dim_) && y.size() == static_cast<size_t>(dim_),
            "DimensionMismatch", "element coordinate size");
    std::vector<int> out(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < dim_; ++j) {
            if (!y[j]) continue;
            int xy = field_.mul(field_.reduce(x[i]), field_.reduce(y[j]));
            for (int k = 0; k < dim_; ++k)
                out[k] = field_.add(out[k], field_.mul(xy, c(i, j, k)));
        }
    }
    return out;
}

Mat Algebra::right_mult(const std::vector<int>& x) const {
    Mat R(field_, dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        std::vector<int> ej(dim_, 0);
        ej[j] = 1;
        std::vector<int> prod = multiply(ej, x);
        for (int k = 0; k < dim_; ++k) R.at(k, j) = prod[k];
    }
    return R;
}

void Algebra::validate() const {
    // Associativity: (e_i e_j) e_l = e_i (e_j e_l), all triples.
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int l = 0; l < dim_; ++l)
                for (int m = 0; m < dim_; ++m) {
                    int lhs = 0, rhs = 0;
                    for (int k = 0; k < dim_; ++k) {
                        lhs = field_.add(lhs, field_.mul(c(i, j, k), c(k, l, m)));
                        rhs = field_.add(rhs, field_.mul(c(j, l, k), c(i, k, m)));
                    }
                    require(lhs == rhs, "NonAssociative",
                            "triple (" + basis_names_[i] + "," + basis_names_[j] + "," +
                                basis_names_[l] + ") coordinate " + basis_names_[m]);
                }
    // Two-sided unit.
    for (int j = 0; j < dim_; ++j) {
        std::vector<int> ej(dim_, 0);
        ej[j] = 1;
        require(multiply(unit_, ej) == ej, "BadUnit",
                "unit fails on the left at " + basis_names_[j]);
        require(multiply(ej, unit_) == ej, "BadUnit",
                "unit fails on the right at " + basis_names_[j]);
    }
    // Idempotents: orthogonal, idempotent, summing to the unit.
    if (!idempotents_.empty()) {
        std::vector<int> total(dim_, 0);
        for (size_t s = 0; s < idempotents_.size(); ++s) {
            for (int k = 0; k < dim_; ++k)
                total[k] = field_.add(total[k], idempotents_[s][k]);
            require(multiply(idempotents_[s], idempotents_[s]) == idempotents_[s],
                    "BadIdempotents", "idempotent " + std::to_string(s) + " is not idempotent");
            for (size_t t = 0; t < idempotents_.size(); ++t) {
                if (s == t) continue;
                std::vector<int> zero(dim_, 0);
                require(multiply(idempotents_[s], idempotents_[t]) == zero, "BadIdempotents",
                        "idempotents " + std::to_string(s) + " and " + std::to_string(t) +
                            " are not orthogonal");
            }
        }
        require(total == unit_, "BadIdempotents", "idempotents do not sum to the unit");
    }
}

bool Algebra::same_table(const Algebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && sc_ == o.sc_ && unit_ == o.unit_;
}

AlgebraPtr opposite(const Algebra& a) {
    int d = a.dim();
    std::vector<int> sc(static_cast<size_t>(d) * d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                sc[(static_cast<size_t>(i) * d + j) * d + k] = a.c(j, i, k);
    return std::make_shared<Algebra>(a.field(), a.basis_names(), std::move(sc), a.unit(),
                                     a.idempotents(),
                                     a.name().empty() ? "" : a.name() + "^op");
}

}  // namespace homcert
