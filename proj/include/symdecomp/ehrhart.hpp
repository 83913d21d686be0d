#ifndef SYMDECOMP_EHRHART_HPP
#define SYMDECOMP_EHRHART_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symdecomp/polynomial.hpp"

namespace symdecomp {

using LatticePoint = std::vector<std::int64_t>;

/// Convex hull of finitely many integer points.
class LatticePolytope {
public:
    /// Throws InputError for an empty vertex list or ragged coordinates.
    explicit LatticePolytope(std::vector<LatticePoint> vertices);

    const std::vector<LatticePoint> &vertices() const noexcept { return vertices_; }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return dim_; }
    bool full_dimensional() const noexcept { return dim_ == ambient_; }

    /// Exact feasibility of x = sum lambda_i v_i, sum lambda_i = 1, lambda >= 0
    /// for the vertices scaled by `scale`.
    bool contains(std::span<const std::int64_t> x, std::int64_t scale = 1) const;

private:
    std::vector<LatticePoint> vertices_;
    std::size_t ambient_ = 0;
    std::size_t dim_ = 0;
};

/// Refuses any bounding box with more cells than this.
inline constexpr std::uint64_t default_cell_budget = 10'000'000;

/// |nP ∩ Z^n|. Each line parallel to the last axis meets nP in a segment;
/// two exact LPs over the convex-combination system give its endpoints.
std::uint64_t lattice_point_count(const LatticePolytope &P, std::uint64_t n,
                                  std::uint64_t cell_budget = default_cell_budget);

/// Same count, testing every cell of the bounding box.
std::uint64_t lattice_point_count_exhaustive(const LatticePolytope &P, std::uint64_t n,
                                             std::uint64_t cell_budget = default_cell_budget);

struct EhrhartData {
    std::vector<Rational> ehr_values; // Ehr_P(0..d)
    Polynomial ehr_poly;              // in the variable n
    Polynomial h_star;
    std::size_t d = 0;
    std::size_t s = 0;
    std::size_t ell = 1;
};

/// Throws NotFullDimensional unless dim P equals the ambient dimension.
EhrhartData ehrhart_data(const LatticePolytope &P, std::uint64_t cell_budget = default_cell_budget);

LatticePolytope dilate_polytope(const LatticePolytope &P, std::int64_t r);

/// h* symmetric about d/2.
bool is_reflexive(const LatticePolytope &P);

struct GorensteinResult {
    bool gorenstein = false;
    std::size_t index = 0;             // ell, meaningful when gorenstein
    bool witness_reflexive = false;    // is_reflexive(ell * P)
    bool needs_review = false;         // gorenstein by h* but the witness failed
};

/// h* symmetric about s/2; the dilate ell*P is checked for reflexivity.
GorensteinResult gorenstein(const LatticePolytope &P);
bool is_gorenstein(const LatticePolytope &P);

enum class Corollary { cor61, cor62 };

struct CorollaryRow {
    std::size_t r = 0;
    Polynomial h_star_geometric;
    Polynomial h_star_algebraic;
    bool identity_holds = false;
    bool property_holds = false;
};

struct CorollaryReport {
    Corollary which = Corollary::cor61;
    std::size_t d = 0;
    std::size_t s = 0;
    std::size_t bound = 0;
    std::vector<CorollaryRow> rows;

    bool all_pass() const;
};

/// For each r in [max{s, d+1-s}, r_max]: h*_{rP} by counting vs. by the
/// dilation operator, then real-rootedness (cor61) or interlacing (cor62) of
/// its symmetric decomposition. cor62 throws GorensteinRequired otherwise.
CorollaryReport verify_corollary(const LatticePolytope &P, Corollary which, std::size_t r_max,
                                 std::uint64_t cell_budget = default_cell_budget);

/// Named polytopes: unit-cube-d{2,3,4}, standard-simplex-d{2,3,4},
/// cross-polytope-d{2,3}, reeve-q{2,3,4}, reflexive-square.
std::vector<std::string> corpus_names();
std::optional<LatticePolytope> corpus_polytope(const std::string &name);

} // namespace symdecomp

#endif
