#include "symdecomp/ehrhart.hpp"

#include <algorithm>
#include <limits>

#include "symdecomp/errors.hpp"
#include "symdecomp/realroots.hpp"
#include "symdecomp/veronese.hpp"

namespace symdecomp {

namespace {

std::size_t affine_rank(const std::vector<LatticePoint> &vertices)
{
    const std::size_t n = vertices.front().size();
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        std::vector<Rational> row(n);
        for (std::size_t k = 0; k < n; ++k) {
            row[k] = Rational(static_cast<long>(vertices[i][k] - vertices[0][k]));
        }
        rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][col]) == 0) {
                continue;
            }
            Rational factor = rows[i][col] / rows[rank][col];
            for (std::size_t k = col; k < n; ++k) {
                rows[i][k] -= factor * rows[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

// Dense simplex tableau for  A lambda = b, lambda >= 0, started from one
// artificial variable per row. Bland's rule (lowest index entering and
// leaving) rules out cycling in both phases.
class Simplex {
public:
    Simplex(const std::vector<std::vector<Rational>> &A, const std::vector<Rational> &b)
        : rows_(A.size()), vars_(A.front().size()), cols_(vars_ + rows_),
          T_(rows_, std::vector<Rational>(cols_ + 1)), basis_(rows_)
    {
        for (std::size_t i = 0; i < rows_; ++i) {
            const bool flip = sgn(b[i]) < 0;
            for (std::size_t j = 0; j < vars_; ++j) {
                T_[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
            }
            T_[i][vars_ + i] = 1;
            T_[i][cols_] = flip ? Rational(-b[i]) : b[i];
            basis_[i] = vars_ + i;
        }
    }

    /// Drives the artificial variables to zero. On success the remaining
    /// artificials are pivoted out and redundant rows dropped, so the basis
    /// uses original variables only.
    bool phase_one()
    {
        std::vector<Rational> cost(cols_);
        for (std::size_t j = vars_; j < cols_; ++j) {
            cost[j] = 1;
        }
        if (sgn(minimize(cost, cols_)) != 0) {
            return false;
        }
        for (std::size_t i = 0; i < rows_;) {
            if (basis_[i] < vars_) {
                ++i;
                continue;
            }
            std::size_t enter = vars_;
            for (std::size_t j = 0; j < vars_; ++j) {
                if (sgn(T_[i][j]) != 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == vars_) {
                T_.erase(T_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --rows_;
                continue;
            }
            pivot(i, enter);
            ++i;
        }
        return true;
    }

    /// Minimum of cost . lambda over the feasible set, starting from the
    /// current feasible basis; only the first `allowed` columns may enter.
    Rational minimize(const std::vector<Rational> &cost, std::size_t allowed)
    {
        while (true) {
            std::size_t enter = allowed;
            for (std::size_t j = 0; j < allowed; ++j) {
                Rational reduced = cost[j];
                for (std::size_t i = 0; i < rows_; ++i) {
                    reduced -= cost[basis_[i]] * T_[i][j];
                }
                if (sgn(reduced) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == allowed) {
                break;
            }
            std::size_t leave = rows_;
            Rational best;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (sgn(T_[i][enter]) <= 0) {
                    continue;
                }
                Rational ratio = T_[i][cols_] / T_[i][enter];
                if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            // Convex combinations form a bounded set.
            ensure(leave != rows_, "membership LP: unbounded problem");
            pivot(leave, enter);
        }
        Rational value = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            value += cost[basis_[i]] * T_[i][cols_];
        }
        return value;
    }

    std::size_t vars() const { return vars_; }
    std::size_t cols() const { return cols_; }

private:
    void pivot(std::size_t leave, std::size_t enter)
    {
        const Rational p = T_[leave][enter];
        for (auto &x : T_[leave]) {
            x /= p;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == leave || sgn(T_[i][enter]) == 0) {
                continue;
            }
            const Rational factor = T_[i][enter];
            for (std::size_t j = 0; j <= cols_; ++j) {
                T_[i][j] -= factor * T_[leave][j];
            }
        }
        basis_[leave] = enter;
    }

    std::size_t rows_;
    std::size_t vars_;
    std::size_t cols_;
    std::vector<std::vector<Rational>> T_;
    std::vector<std::size_t> basis_;
};

// Convex-combination system: the first `fixed` coordinates of
// sum lambda_j (scale v_j) equal x, and sum lambda_j = 1.
Simplex combination_system(const LatticePolytope &P, std::span<const std::int64_t> x, std::size_t fixed,
                           std::int64_t scale)
{
    const auto &verts = P.vertices();
    std::vector<std::vector<Rational>> A(fixed + 1, std::vector<Rational>(verts.size()));
    std::vector<Rational> b(fixed + 1);
    for (std::size_t k = 0; k < fixed; ++k) {
        for (std::size_t j = 0; j < verts.size(); ++j) {
            A[k][j] = Rational(static_cast<long>(verts[j][k] * scale));
        }
        b[k] = Rational(static_cast<long>(x[k]));
    }
    for (std::size_t j = 0; j < verts.size(); ++j) {
        A[fixed][j] = 1;
    }
    b[fixed] = 1;
    return Simplex(A, b);
}

Rational ceil_of(const Rational &x)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rational(q);
}

Rational floor_of(const Rational &x)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rational(q);
}

struct Box {
    std::vector<std::int64_t> lo;
    std::vector<std::int64_t> hi;
};

Box bounding_box(const LatticePolytope &P, std::int64_t n, std::uint64_t budget)
{
    Box box;
    const std::size_t dim = P.ambient_dim();
    box.lo.assign(dim, std::numeric_limits<std::int64_t>::max());
    box.hi.assign(dim, std::numeric_limits<std::int64_t>::min());
    for (const auto &v : P.vertices()) {
        for (std::size_t k = 0; k < dim; ++k) {
            box.lo[k] = std::min(box.lo[k], v[k] * n);
            box.hi[k] = std::max(box.hi[k], v[k] * n);
        }
    }
    long double cells = 1;
    for (std::size_t k = 0; k < dim; ++k) {
        cells *= static_cast<long double>(box.hi[k] - box.lo[k] + 1);
    }
    if (cells > static_cast<long double>(budget)) {
        throw BudgetExceeded("lattice point count: bounding box of " + std::to_string(n) + "P has " +
                             std::to_string(static_cast<double>(cells)) + " cells, budget is " +
                             std::to_string(budget));
    }
    return box;
}

// Visits every assignment of the first `fixed` coordinates within the box.
template <typename Visit>
void for_each_prefix(const Box &box, std::size_t fixed, Visit &&visit)
{
    std::vector<std::int64_t> x(box.lo.size());
    for (std::size_t k = 0; k < fixed; ++k) {
        x[k] = box.lo[k];
    }
    while (true) {
        visit(x);
        std::size_t k = fixed;
        while (true) {
            if (k == 0) {
                return;
            }
            --k;
            if (x[k] < box.hi[k]) {
                ++x[k];
                break;
            }
            x[k] = box.lo[k];
        }
    }
}

Polynomial interpolate_from_zero(std::span<const Rational> values)
{
    // Newton form on the nodes 0..m: sum_k (Δ^k f)(0) * C(n, k).
    std::vector<Rational> diff(values.begin(), values.end());
    Polynomial result;
    Polynomial falling = Polynomial::constant(1); // n (n-1) ... (n-k+1) / k!
    for (std::size_t k = 0; k < values.size(); ++k) {
        result += falling * diff[0];
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) {
            diff[i] = diff[i + 1] - diff[i];
        }
        diff.pop_back();
        const Polynomial factor{Rational(-static_cast<long>(k)), Rational(1)};
        falling = falling * factor * (Rational(1) / static_cast<unsigned long>(k + 1));
    }
    return result;
}

LatticePolytope box_polytope(std::size_t dim, std::int64_t lo, std::int64_t hi)
{
    std::vector<LatticePoint> v;
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
        LatticePoint p(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            p[k] = (mask >> k) & 1 ? hi : lo;
        }
        v.push_back(std::move(p));
    }
    return LatticePolytope(std::move(v));
}

LatticePolytope simplex_polytope(std::size_t dim)
{
    std::vector<LatticePoint> v{LatticePoint(dim, 0)};
    for (std::size_t k = 0; k < dim; ++k) {
        LatticePoint e(dim, 0);
        e[k] = 1;
        v.push_back(std::move(e));
    }
    return LatticePolytope(std::move(v));
}

LatticePolytope cross_polytope(std::size_t dim)
{
    std::vector<LatticePoint> v;
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::int64_t sgn_k : {1, -1}) {
            LatticePoint e(dim, 0);
            e[k] = sgn_k;
            v.push_back(std::move(e));
        }
    }
    return LatticePolytope(std::move(v));
}

LatticePolytope reeve(std::int64_t q)
{
    return LatticePolytope({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, q}});
}

} // namespace

LatticePolytope::LatticePolytope(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.empty()) {
        throw InputError("lattice polytope needs at least one vertex");
    }
    ambient_ = vertices_.front().size();
    for (const auto &v : vertices_) {
        if (v.size() != ambient_) {
            throw InputError("lattice polytope vertices have inconsistent dimensions");
        }
    }
    dim_ = affine_rank(vertices_);
}

bool LatticePolytope::contains(std::span<const std::int64_t> x, std::int64_t scale) const
{
    if (x.size() != ambient_) {
        throw InputError("contains: point has the wrong dimension");
    }
    if (scale == 0) {
        return std::all_of(x.begin(), x.end(), [](std::int64_t c) { return c == 0; });
    }
    return combination_system(*this, x, ambient_, scale).phase_one();
}

std::uint64_t lattice_point_count(const LatticePolytope &P, std::uint64_t n, std::uint64_t cell_budget)
{
    if (n == 0 || P.ambient_dim() == 0) {
        return 1;
    }
    const auto scale = static_cast<std::int64_t>(n);
    const Box box = bounding_box(P, scale, cell_budget);
    const std::size_t last = P.ambient_dim() - 1;
    std::uint64_t total = 0;
    const auto &verts = P.vertices();
    std::vector<Rational> up(verts.size() + last + 1);
    std::vector<Rational> down(up.size());
    for (std::size_t j = 0; j < verts.size(); ++j) {
        up[j] = Rational(static_cast<long>(-verts[j][last] * scale));
        down[j] = -up[j];
    }
    for_each_prefix(box, last, [&](std::vector<std::int64_t> &x) {
        Simplex lp = combination_system(P, x, last, scale);
        if (!lp.phase_one()) {
            return;
        }
        const Rational hi = floor_of(-lp.minimize(up, lp.vars()));
        const Rational lo = ceil_of(lp.minimize(down, lp.vars()));
        if (lo <= hi) {
            const Rational run = hi - lo + 1;
            total += run.get_num().get_ui();
        }
    });
    return total;
}

std::uint64_t lattice_point_count_exhaustive(const LatticePolytope &P, std::uint64_t n, std::uint64_t cell_budget)
{
    if (P.ambient_dim() == 0) {
        return 1;
    }
    const auto scale = static_cast<std::int64_t>(n);
    const Box box = bounding_box(P, scale, cell_budget);
    std::uint64_t total = 0;
    for_each_prefix(box, P.ambient_dim(), [&](std::vector<std::int64_t> &x) {
        if (P.contains(x, scale)) {
            ++total;
        }
    });
    return total;
}

EhrhartData ehrhart_data(const LatticePolytope &P, std::uint64_t cell_budget)
{
    if (!P.full_dimensional()) {
        throw NotFullDimensional("ehrhart_data: polytope has dimension " + std::to_string(P.dim()) +
                                 " in ambient dimension " + std::to_string(P.ambient_dim()));
    }
    EhrhartData out;
    out.d = P.dim();
    // One count beyond Ehr(0..d) so the transform has a vanishing coefficient to check.
    std::vector<Rational> counts;
    for (std::uint64_t n = 0; n <= out.d + 1; ++n) {
        counts.emplace_back(static_cast<unsigned long>(lattice_point_count(P, n, cell_budget)));
    }
    out.ehr_values.assign(counts.begin(), counts.end() - 1);
    out.ehr_poly = interpolate_from_zero(out.ehr_values);
    ensure(out.ehr_poly(Rational(static_cast<unsigned long>(out.d + 1))) == counts.back(),
           "ehrhart_data: count at n = d+1 is off the interpolated Ehrhart polynomial");
    out.h_star = numerator_from_sequence(counts, out.d + 1);

    ensure(out.ehr_values.front() == 1, "ehrhart_data: Ehr(0) != 1");
    for (const auto &c : out.h_star.coeffs()) {
        ensure(sgn(c) >= 0 && c.get_den() == 1, "ehrhart_data: h* coefficient not a nonnegative integer: " +
                                                    out.h_star.to_string());
    }
    ensure(out.h_star(Rational(1)) >= 1, "ehrhart_data: h*(1) < 1");
    out.s = *out.h_star.degree();
    out.ell = out.d + 1 - out.s;
    return out;
}

LatticePolytope dilate_polytope(const LatticePolytope &P, std::int64_t r)
{
    if (r < 1) {
        throw InputError("dilate_polytope: r must be positive");
    }
    std::vector<LatticePoint> v = P.vertices();
    for (auto &p : v) {
        for (auto &c : p) {
            c *= r;
        }
    }
    return LatticePolytope(std::move(v));
}

bool is_reflexive(const LatticePolytope &P)
{
    const EhrhartData data = ehrhart_data(P);
    return is_symmetric(data.h_star, static_cast<long>(data.d));
}

GorensteinResult gorenstein(const LatticePolytope &P)
{
    const EhrhartData data = ehrhart_data(P);
    GorensteinResult out;
    out.gorenstein = is_symmetric(data.h_star, static_cast<long>(data.s));
    if (out.gorenstein) {
        out.index = data.ell;
        out.witness_reflexive = is_reflexive(dilate_polytope(P, static_cast<std::int64_t>(data.ell)));
        out.needs_review = !out.witness_reflexive;
    }
    return out;
}

bool is_gorenstein(const LatticePolytope &P)
{
    return gorenstein(P).gorenstein;
}

bool CorollaryReport::all_pass() const
{
    return std::all_of(rows.begin(), rows.end(),
                       [](const CorollaryRow &row) { return row.identity_holds && row.property_holds; });
}

CorollaryReport verify_corollary(const LatticePolytope &P, Corollary which, std::size_t r_max,
                                 std::uint64_t cell_budget)
{
    const EhrhartData data = ehrhart_data(P, cell_budget);
    if (which == Corollary::cor62 && !is_symmetric(data.h_star, static_cast<long>(data.s))) {
        throw GorensteinRequired("verify_corollary: cor62 needs a Gorenstein polytope, h* = " +
                                 data.h_star.to_string());
    }
    CorollaryReport report;
    report.which = which;
    report.d = data.d;
    report.s = data.s;
    report.bound = std::max(data.s, data.d + 1 - data.s);
    const auto property = which == Corollary::cor61 ? DecompProperty::real_rooted : DecompProperty::interlacing;
    for (std::size_t r = report.bound; r <= r_max; ++r) {
        CorollaryRow row;
        row.r = r;
        row.h_star_geometric =
            ehrhart_data(dilate_polytope(P, static_cast<std::int64_t>(r)), cell_budget).h_star;
        row.h_star_algebraic = dilate_numerator_checked(data.h_star, r, data.d + 1);
        row.identity_holds = row.h_star_geometric == row.h_star_algebraic;
        row.property_holds = decomposition_is(row.h_star_geometric, data.d, property);
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<std::string> corpus_names()
{
    return {"unit-cube-d2",     "unit-cube-d3",     "unit-cube-d4",      "standard-simplex-d2",
            "standard-simplex-d3", "standard-simplex-d4", "cross-polytope-d2", "cross-polytope-d3",
            "reeve-q2",         "reeve-q3",         "reeve-q4",          "reflexive-square"};
}

std::optional<LatticePolytope> corpus_polytope(const std::string &name)
{
    for (std::size_t d = 2; d <= 4; ++d) {
        const std::string suffix = "-d" + std::to_string(d);
        if (name == "unit-cube" + suffix) {
            return box_polytope(d, 0, 1);
        }
        if (name == "standard-simplex" + suffix) {
            return simplex_polytope(d);
        }
        if (d <= 3 && name == "cross-polytope" + suffix) {
            return cross_polytope(d);
        }
        if (name == "reeve-q" + std::to_string(d)) {
            return reeve(static_cast<std::int64_t>(d));
        }
    }
    if (name == "reflexive-square") {
        return box_polytope(2, -1, 1);
    }
    return std::nullopt;
}

} // namespace symdecomp
