#include "homcert/module.hpp"

namespace homcert {

Module::Module(AlgebraPtr algebra, std::vector<Mat> action, std::string name)
    : algebra_(std::move(algebra)), action_(std::move(action)), name_(std::move(name)) {
    require(algebra_ != nullptr, "MalformedSpec", "module without algebra");
    const Algebra& A = *algebra_;
    require(action_.size() == static_cast<size_t>(A.dim()), "MalformedSpec",
            "need one action matrix per basis element");
    dim_ = action_.empty() ? 0 : action_[0].rows();
    require(dim_ <= max_object_dim(), "MalformedSpec", "module dimension exceeds cap");
    for (const Mat& r : action_) {
        require(r.rows() == dim_ && r.cols() == dim_, "DimensionMismatch",
                "action matrices must be square of the module dimension");
        require(r.field() == A.field(), "DimensionMismatch", "action over wrong field");
    }
    // Module axiom on all basis pairs.
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j) {
            Mat lhs = action_[i] * action_[j];
            Mat rhs(A.field(), dim_, dim_);
            for (int k = 0; k < A.dim(); ++k)
                if (A.c(i, j, k)) rhs = rhs + scale(action_[k], A.c(i, j, k));
            require(lhs == rhs, "MalformedSpec",
                    "module axiom fails at basis pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
        }
    require(act(A.unit()) == Mat::identity(A.field(), dim_), "MalformedSpec",
            "unit does not act as identity");
}

Module Module::zero(AlgebraPtr algebra) {
    std::vector<Mat> act(algebra->dim(), Mat(algebra->field(), 0, 0));
    return Module(std::move(algebra), std::move(act), "0");
}

Module Module::regular(AlgebraPtr algebra) {
    std::vector<Mat> act;
    act.reserve(algebra->dim());
    for (int i = 0; i < algebra->dim(); ++i) act.push_back(algebra->left_mult(i));
    return Module(std::move(algebra), std::move(act), "A");
}

Module Module::free(AlgebraPtr algebra, int k) {
    require(k >= 0, "MalformedSpec", "negative rank");
    const int d = algebra->dim();
    std::vector<Mat> act;
    act.reserve(d);
    for (int i = 0; i < d; ++i) {
        Mat big(algebra->field(), d * k, d * k);
        for (int b = 0; b < k; ++b) paste(big, algebra->left_mult(i), b * d, b * d);
        act.push_back(std::move(big));
    }
    return Module(std::move(algebra), std::move(act), "A^" + std::to_string(k));
}

Mat Module::act(const std::vector<int>& x) const {
    Mat r(field(), dim_, dim_);
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i]) r = r + scale(action_[static_cast<int>(i)], x[i]);
    return r;
}

bool Module::same_presentation(const Module& o) const {
    return algebra_->same_table(*o.algebra_) && dim_ == o.dim_ && action_ == o.action_;
}

bool intertwines(const Module& source, const Module& target, const Mat& matrix) {
    for (int i = 0; i < source.algebra()->dim(); ++i)
        if (matrix * source.action(i) != target.action(i) * matrix) return false;
    return true;
}

ModuleMap::ModuleMap(Module source, Module target, Mat matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    require(source_.algebra()->same_table(*target_.algebra()), "AlgebraMismatch",
            "map between modules over different algebras");
    require(matrix_.rows() == target_.dim() && matrix_.cols() == source_.dim(),
            "DimensionMismatch", "map matrix shape");
    require(intertwines(source_, target_, matrix_), "MalformedSpec",
            "matrix does not intertwine the actions");
}

bool ModuleMap::is_injective() const { return rank(matrix_) == source_.dim(); }
bool ModuleMap::is_surjective() const { return rank(matrix_) == target_.dim(); }

ModuleMap ModuleMap::zero(const Module& source, const Module& target) {
    return ModuleMap(source, target, Mat(source.field(), target.dim(), source.dim()));
}
ModuleMap ModuleMap::identity(const Module& m) {
    return ModuleMap(m, m, Mat::identity(m.field(), m.dim()));
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    require(g.source().dim() == f.target().dim(), "DimensionMismatch", "composition");
    return ModuleMap(f.source(), g.target(), g.matrix() * f.matrix());
}

ShortExactSequence::ShortExactSequence(ModuleMap i_, ModuleMap q_)
    : i(std::move(i_)), q(std::move(q_)) {
    require(i.target().dim() == q.source().dim(), "MalformedSpec",
            "middle terms disagree");
    require(i.is_injective(), "MalformedSpec", "i is not injective");
    require(q.is_surjective(), "MalformedSpec", "q is not surjective");
    require((q.matrix() * i.matrix()).is_zero(), "MalformedSpec", "q after i is nonzero");
    require(rank(i.matrix()) + rank(q.matrix()) == i.target().dim(), "MalformedSpec",
            "image(i) != kernel(q)");
}

bool is_action_stable(const Module& m, const Mat& basis) {
    for (int i = 0; i < m.algebra()->dim(); ++i)
        if (!spans_contain(basis, m.action(i) * basis)) return false;
    return true;
}

Submodule submodule_generated(const Module& m, const Mat& vectors) {
    require(vectors.rows() == m.dim(), "DimensionMismatch", "generator length");
    Mat basis = image_basis(vectors);
    for (;;) {
        Mat next = basis;
        for (int i = 0; i < m.algebra()->dim(); ++i)
            next = hstack(next, m.action(i) * basis);
        next = image_basis(next);
        if (next.cols() == basis.cols()) return Submodule{basis};
        basis = next;
    }
}

SubmoduleObject submodule_object(const Module& m, const Mat& basis, std::string name) {
    require(basis.rows() == m.dim(), "DimensionMismatch", "submodule basis length");
    require(rank(basis) == basis.cols(), "MalformedSpec", "submodule basis not independent");
    require(is_action_stable(m, basis), "NotActionStable",
            "subspace is not closed under the action");
    std::vector<Mat> act;
    act.reserve(m.algebra()->dim());
    for (int i = 0; i < m.algebra()->dim(); ++i) {
        // rho(e_i) basis = basis * r  has a unique solution (full column rank).
        auto r = solve(basis, m.action(i) * basis);
        require(r.has_value(), "NotActionStable", "restriction failed");
        act.push_back(*r);
    }
    Module sub(m.algebra(), std::move(act), std::move(name));
    return SubmoduleObject{sub, ModuleMap(sub, m, basis)};
}

QuotientObject quotient(const Module& m, const Mat& sub_basis, std::string name) {
    require(sub_basis.rows() == m.dim(), "DimensionMismatch", "submodule basis length");
    require(is_action_stable(m, sub_basis), "NotActionStable",
            "subspace is not closed under the action");
    // Complement coordinates: extend the submodule basis by standard basis
    // vectors; the projection sends x to its coordinates on the added part.
    Mat sub = image_basis(sub_basis);
    Mat full = hstack(sub, Mat::identity(m.field(), m.dim()));
    Echelon e = rref(full);
    std::vector<int> added;  // pivot columns beyond the submodule block
    for (int c : e.pivots)
        if (c >= sub.cols()) added.push_back(c - sub.cols());
    Mat basis_ext = sub;
    for (int j : added) {
        Mat col(m.field(), m.dim(), 1);
        col.at(j, 0) = 1;
        basis_ext = hstack(basis_ext, col);
    }
    // In the extended basis, coordinates split as [submodule | complement];
    // the projection matrix takes the complement block.
    Mat inv = preimage_operator(basis_ext);  // exact inverse: basis_ext is square invertible
    Mat proj = inv.select_rows([&] {
        std::vector<int> idx;
        for (int j = sub.cols(); j < basis_ext.cols(); ++j) idx.push_back(j);
        return idx;
    }());
    int q = static_cast<int>(added.size());
    Mat comp = basis_ext.select_cols([&] {
        std::vector<int> idx;
        for (int j = sub.cols(); j < basis_ext.cols(); ++j) idx.push_back(j);
        return idx;
    }());
    std::vector<Mat> act;
    act.reserve(m.algebra()->dim());
    for (int i = 0; i < m.algebra()->dim(); ++i)
        act.push_back(proj * (m.action(i) * comp));
    Module qmod(m.algebra(), std::move(act), std::move(name));
    require(qmod.dim() == q, "DimensionMismatch", "quotient dimension");
    return QuotientObject{qmod, ModuleMap(m, qmod, proj)};
}

SubmoduleObject kernel(const ModuleMap& f) {
    return submodule_object(f.source(), kernel_basis(f.matrix()));
}
SubmoduleObject image(const ModuleMap& f) {
    return submodule_object(f.target(), image_basis(f.matrix()));
}
QuotientObject cokernel(const ModuleMap& f) {
    return quotient(f.target(), image_basis(f.matrix()));
}

DirectSum direct_sum(const std::vector<Module>& parts) {
    require(!parts.empty(), "MalformedSpec", "empty direct sum");
    AlgebraPtr A = parts[0].algebra();
    int total_dim = 0;
    for (const Module& p : parts) {
        require(p.algebra()->same_table(*A), "AlgebraMismatch", "direct sum across algebras");
        total_dim += p.dim();
    }
    std::vector<Mat> act;
    for (int i = 0; i < A->dim(); ++i) {
        Mat big(A->field(), total_dim, total_dim);
        int off = 0;
        for (const Module& p : parts) {
            paste(big, p.action(i), off, off);
            off += p.dim();
        }
        act.push_back(std::move(big));
    }
    Module total(A, std::move(act));
    DirectSum ds{total, {}, {}};
    int off = 0;
    for (const Module& p : parts) {
        Mat incl(A->field(), total_dim, p.dim());
        Mat proj(A->field(), p.dim(), total_dim);
        for (int j = 0; j < p.dim(); ++j) {
            incl.at(off + j, j) = 1;
            proj.at(j, off + j) = 1;
        }
        ds.inclusions.emplace_back(p, total, incl);
        ds.projections.emplace_back(total, p, proj);
        off += p.dim();
    }
    return ds;
}

std::vector<ModuleMap> hom_space(const Module& m, const Module& n) {
    require(m.algebra()->same_table(*n.algebra()), "AlgebraMismatch", "hom across algebras");
    const PrimeField& F = m.field();
    const int a = m.dim(), b = n.dim();
    if (a == 0 || b == 0) return {};
    // Unknown T (b x a), vectorized row-major; constraints
    // T rho_m(e_i) - rho_n(e_i) T = 0 for each basis element.
    const int d = m.algebra()->dim();
    Mat sys(F, d * a * b, a * b);
    for (int i = 0; i < d; ++i) {
        const Mat& rm = m.action(i);
        const Mat& rn = n.action(i);
        for (int r = 0; r < b; ++r)
            for (int c = 0; c < a; ++c) {
                int eq = (i * b + r) * a + c;
                // (T rho_m)_{r,c} = sum_k T_{r,k} rho_m_{k,c}
                for (int k = 0; k < a; ++k)
                    sys.at(eq, r * a + k) = F.add(sys.at(eq, r * a + k), rm.at(k, c));
                // (rho_n T)_{r,c} = sum_k rho_n_{r,k} T_{k,c}
                for (int k = 0; k < b; ++k)
                    sys.at(eq, k * a + c) = F.sub(sys.at(eq, k * a + c), rn.at(r, k));
            }
    }
    Mat K = kernel_basis(sys);
    std::vector<ModuleMap> out;
    out.reserve(K.cols());
    for (int j = 0; j < K.cols(); ++j) {
        Mat T(F, b, a);
        for (int r = 0; r < b; ++r)
            for (int c = 0; c < a; ++c) T.at(r, c) = K.at(r * a + c, j);
        out.emplace_back(m, n, T);
    }
    return out;
}

ModuleMap free_cover(const Module& m, std::optional<Mat> generators) {
    AlgebraPtr A = m.algebra();
    Mat gens = generators ? *generators : Mat::identity(m.field(), m.dim());
    require(gens.rows() == m.dim(), "DimensionMismatch", "generator length");
    require(submodule_generated(m, gens).basis.cols() == m.dim(), "NotGenerating",
            "vectors do not generate the module");
    const int k = gens.cols(), d = A->dim();
    Module F = Module::free(A, k);
    Mat pi(m.field(), m.dim(), d * k);
    for (int j = 0; j < k; ++j) {
        Mat g = gens.col(j);
        for (int i = 0; i < d; ++i) {
            Mat img = m.action(i) * g;
            for (int r = 0; r < m.dim(); ++r) pi.at(r, j * d + i) = img.at(r, 0);
        }
    }
    ModuleMap cover(F, m, pi);
    require(cover.is_surjective(), "NotGenerating", "cover is not surjective");
    return cover;
}

std::optional<Mat> projective_section(const ModuleMap& cover) {
    const Module& M = cover.source();  // free module
    const Module& m = cover.target();
    const PrimeField& F = m.field();
    const int a = m.dim(), b = M.dim(), d = m.algebra()->dim();
    if (a == 0) return Mat(F, b, 0);
    // Unknown S (b x a): equivariance (d*a*b equations) plus pi S = id (a*a).
    Mat sys(F, d * a * b + a * a, a * b);
    Mat rhs(F, d * a * b + a * a, 1);
    for (int i = 0; i < d; ++i) {
        const Mat& rm = m.action(i);
        const Mat& rM = M.action(i);
        for (int r = 0; r < b; ++r)
            for (int c = 0; c < a; ++c) {
                int eq = (i * b + r) * a + c;
                for (int k = 0; k < a; ++k)
                    sys.at(eq, r * a + k) = F.add(sys.at(eq, r * a + k), rm.at(k, c));
                for (int k = 0; k < b; ++k)
                    sys.at(eq, k * a + c) = F.sub(sys.at(eq, k * a + c), rM.at(r, k));
            }
    }
    const Mat& pi = cover.matrix();
    for (int r = 0; r < a; ++r)
        for (int c = 0; c < a; ++c) {
            int eq = d * a * b + r * a + c;
            for (int k = 0; k < b; ++k) sys.at(eq, k * a + c) = pi.at(r, k);
            rhs.at(eq, 0) = (r == c) ? 1 : 0;
        }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    Mat S(F, b, a);
    for (int r = 0; r < b; ++r)
        for (int c = 0; c < a; ++c) S.at(r, c) = sol->at(r * a + c, 0);
    return S;
}

std::optional<ProjectiveWitness> is_projective(const Module& m) {
    ModuleMap cover = free_cover(m);
    auto s = projective_section(cover);
    if (!s) return std::nullopt;
    return ProjectiveWitness{cover, *s};
}

Module conjugate(const Module& m, const Mat& invertible, const Mat& inverse) {
    require(invertible * inverse == Mat::identity(m.field(), m.dim()), "MalformedSpec",
            "not an inverse pair");
    std::vector<Mat> act;
    for (int i = 0; i < m.algebra()->dim(); ++i)
        act.push_back(invertible * (m.action(i) * inverse));
    return Module(m.algebra(), std::move(act), m.name());
}

}  // namespace homcert
