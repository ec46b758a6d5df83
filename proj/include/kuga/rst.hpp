#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "kuga/cyclo.hpp"
#include "kuga/errors.hpp"
#include "kuga/presets.hpp"
#include "kuga/symplectic.hpp"

namespace kuga {

inline constexpr double kDefaultSnapTol = 1e-9;
inline constexpr int kOrderCap = 60;

enum class Locus { interior, boundary_rank1 };

/// A rank-1 cusp point in the (H_1 x C x C) coordinates. Only tau1 enters
/// the linearization; the other two slots are carried for completeness.
struct BoundaryPoint {
    cplx tau1{};
    cplx v{};
    cplx torus{};
};

namespace detail {

inline int element_order(const SpElement& g, int cap = kOrderCap) {
    try {
        return g.order(cap);
    } catch (const OrderExceedsCap& e) {
        throw NotFiniteOrder(e.what());
    }
}

/// Moebius action of an integer 2x2 matrix on the upper half plane.
inline cplx moebius(const Mat2& m, cplx z) {
    cplx den = double(m[1][0]) * z + double(m[1][1]);
    if (std::abs(den) < 1e-12)
        throw NumericalBreakdown("moebius: vanishing denominator");
    return (double(m[0][0]) * z + double(m[0][1])) / den;
}

/// Stand-in H_2 point over a rank-1 cusp: tau1 from the cusp, zero off the
/// diagonal, and an arbitrary interior value in the toroidal direction. The
/// cusp stabilizers act block-diagonally, so the automorphy factor does not
/// see the stand-in coordinate.
inline SiegelPoint boundary_standin(const BoundaryPoint& q) {
    return SiegelPoint{q.tau1, cplx(0.0), cplx(0.0, 2.0)};
}

/// Exponent a over denominator k of a snapped root of unity whose order must
/// divide k.
inline long long exponent_over(const UnityExponent& e, long long k) {
    if (k % e.denominator() != 0)
        throw SnapFailure("snapped exponent " + e.str() +
                          " has order not dividing " + std::to_string(k));
    return e.numerator() * (k / e.denominator());
}

} // namespace detail

/// Snapped eigen-exponents of the automorphy factor N of g at a fixed point.
/// Diagonal N keeps its diagonal order (this is what lines the fiber slots
/// up with the tables); otherwise eigenvalues are sorted by descending
/// exponent, which is all that multiset-level consumers need.
inline std::pair<UnityExponent, UnityExponent>
automorphy_exponents(const SpElement& g, const SiegelPoint& tau,
                     double snap_tol = kDefaultSnapTol) {
    int k = detail::element_order(g);
    Mat2c n = automorphy_inverse(g, tau);
    long long max_order = 2LL * k;
    if (mat2c_is_diagonal(n, snap_tol)) {
        return {snap(n[0][0], max_order, snap_tol),
                snap(n[1][1], max_order, snap_tol)};
    }
    auto eig = mat2c_eigenvalues(n);
    UnityExponent e0 = snap(eig[0], max_order, snap_tol);
    UnityExponent e1 = snap(eig[1], max_order, snap_tol);
    if (e0.as_rational() < e1.as_rational())
        std::swap(e0, e1);
    return {e0, e1};
}

/// Type of a torsion element at an interior fixed point: the H_2 block is
/// the symmetric square of the automorphy eigen-exponents, the fiber block
/// is n copies of each eigen-exponent.
inline SingularityType interior_type(const KugaElement& g,
                                     const SiegelPoint& tau, int n,
                                     double snap_tol = kDefaultSnapTol) {
    if (n < 0)
        throw std::invalid_argument("interior_type: n must be >= 0");
    const SpElement& gamma = g.gamma();
    long long k = detail::element_order(gamma);
    auto [e1, e2] = automorphy_exponents(gamma, tau, snap_tol);
    long long a1 = detail::exponent_over(e1, k);
    long long a2 = detail::exponent_over(e2, k);

    std::vector<long long> exps = {(2 * a1) % k, (a1 + a2) % k, (2 * a2) % k};
    std::vector<SlotLabel> labels(3, SlotLabel::base_h2);
    for (int i = 0; i < n; ++i)
        exps.push_back(a1);
    for (int i = 0; i < n; ++i)
        exps.push_back(a2);
    labels.insert(labels.end(), 2 * static_cast<std::size_t>(n), SlotLabel::fiber);
    return SingularityType(k, std::move(exps), std::move(labels));
}

/// Type at a rank-1 cusp. The three base slots come from the inverse element
/// linearized on the (tau1, tau2) coordinates after resolving: the Moebius
/// derivative at tau1, the tau2 multiplier u/(c tau1 + d), and a zero for
/// the toroidal direction. Fiber slots are the same automorphy exponents as
/// in the interior (not inverted).
inline SingularityType boundary_type(const KugaElement& g,
                                     const BoundaryPoint& q, int n,
                                     double snap_tol = kDefaultSnapTol) {
    if (n < 0)
        throw std::invalid_argument("boundary_type: n must be >= 0");
    const SpElement& gamma = g.gamma();
    long long k = detail::element_order(gamma);

    if (std::abs(detail::moebius(gamma.gamma_prime(), q.tau1) - q.tau1) >
        kFixPointTol)
        throw DoesNotFixPoint("boundary_type: element does not fix the cusp point");

    SpElement inv = gamma.inverse();
    Submatrices sub = submatrices(inv);
    const Mat2& gp = sub.gamma_prime;
    cplx cd = double(gp[1][0]) * q.tau1 + double(gp[1][1]);
    if (std::abs(cd) < 1e-12)
        throw NumericalBreakdown("boundary_type: vanishing automorphy denominator");
    double detp = double(gp[0][0] * gp[1][1] - gp[0][1] * gp[1][0]);

    long long max_order = 2 * k;
    long long f_slot =
        detail::exponent_over(snap(detp / (cd * cd), max_order, snap_tol), k);
    long long v_slot =
        detail::exponent_over(snap(double(sub.u) / cd, max_order, snap_tol), k);

    auto [e1, e2] =
        automorphy_exponents(gamma, detail::boundary_standin(q), snap_tol);
    long long a1 = detail::exponent_over(e1, k);
    long long a2 = detail::exponent_over(e2, k);

    std::vector<long long> exps = {f_slot, v_slot, 0};
    std::vector<SlotLabel> labels = {SlotLabel::base_f, SlotLabel::base_v,
                                     SlotLabel::base_torus};
    for (int i = 0; i < n; ++i)
        exps.push_back(a1);
    for (int i = 0; i < n; ++i)
        exps.push_back(a2);
    labels.insert(labels.end(), 2 * static_cast<std::size_t>(n), SlotLabel::fiber);
    return SingularityType(k, std::move(exps), std::move(labels));
}

class Scenario;
inline SingularityType boundary_type(const KugaElement& g, const Scenario& s,
                                     int n, double snap_tol);

/// Assemble a type directly from known exponent data; covers loci whose
/// stabilizer matrix is not available in matrix form.
inline SingularityType direct_type(const std::vector<long long>& base_exponents,
                                   long long order,
                                   const std::array<long long, 2>& fiber_exponents,
                                   int n, Locus locus = Locus::interior) {
    if (n < 0)
        throw std::invalid_argument("direct_type: n must be >= 0");
    std::vector<long long> exps = base_exponents;
    std::vector<SlotLabel> labels;
    if (locus == Locus::interior) {
        labels.assign(base_exponents.size(), SlotLabel::base_h2);
    } else {
        labels = {SlotLabel::base_f, SlotLabel::base_v, SlotLabel::base_torus};
        if (base_exponents.size() != 3)
            throw ExponentOutOfRange("direct_type: boundary base needs 3 slots");
    }
    for (int i = 0; i < n; ++i)
        exps.push_back(fiber_exponents[0]);
    for (int i = 0; i < n; ++i)
        exps.push_back(fiber_exponents[1]);
    labels.insert(labels.end(), 2 * static_cast<std::size_t>(n), SlotLabel::fiber);
    return SingularityType(order, std::move(exps), std::move(labels));
}

/// A fixed-point situation to feed through the criterion: where the fixed
/// point lives, which generator stabilizes it, the fiber dimension, and
/// whether the central involution is included alongside the generator.
class Scenario {
  public:
    static Scenario interior(SiegelPoint tau, KugaElement gamma, int n,
                             bool include_sigma) {
        if (n < 0)
            throw std::invalid_argument("Scenario: n must be >= 0");
        if (!tau.in_domain())
            throw std::invalid_argument("Scenario: point not in the upper half space");
        if (act(gamma.gamma(), tau).max_diff(tau) > kFixPointTol)
            throw DoesNotFixPoint("Scenario: generator does not fix the point");
        detail::element_order(gamma.gamma());
        Scenario s;
        s.locus_ = Locus::interior;
        s.tau_ = tau;
        s.gamma_ = std::move(gamma);
        s.n_ = n;
        s.include_sigma_ = include_sigma;
        return s;
    }

    static Scenario boundary(BoundaryPoint q, KugaElement gamma, int n,
                             bool include_sigma) {
        if (n < 0)
            throw std::invalid_argument("Scenario: n must be >= 0");
        if (!(q.tau1.imag() > 0))
            throw std::invalid_argument("Scenario: tau1 not in the upper half plane");
        if (std::abs(detail::moebius(gamma.gamma().gamma_prime(), q.tau1) -
                     q.tau1) > kFixPointTol)
            throw DoesNotFixPoint("Scenario: generator does not fix the cusp point");
        detail::element_order(gamma.gamma());
        Scenario s;
        s.locus_ = Locus::boundary_rank1;
        s.boundary_ = q;
        s.gamma_ = std::move(gamma);
        s.n_ = n;
        s.include_sigma_ = include_sigma;
        return s;
    }

    /// Generator known only through its exponent data (base triple over a
    /// given order, plus the two fiber eigen-exponents).
    static Scenario direct(long long order, std::array<long long, 3> base,
                           std::array<long long, 2> fiber, int n,
                           bool include_sigma, Locus locus = Locus::interior) {
        for (long long a : base)
            if (a < 0 || a >= order)
                throw ExponentOutOfRange("Scenario: base exponent out of range");
        for (long long a : fiber)
            if (a < 0 || a >= order)
                throw ExponentOutOfRange("Scenario: fiber exponent out of range");
        if (n < 0)
            throw std::invalid_argument("Scenario: n must be >= 0");
        Scenario s;
        s.locus_ = locus;
        s.direct_order_ = order;
        s.direct_base_ = base;
        s.direct_fiber_ = fiber;
        s.n_ = n;
        s.include_sigma_ = include_sigma;
        return s;
    }

    Locus locus() const { return locus_; }
    int n() const { return n_; }
    bool include_sigma() const { return include_sigma_; }
    bool is_direct() const { return !gamma_.has_value(); }
    const KugaElement& gamma() const { return *gamma_; }
    const SiegelPoint& tau() const { return tau_; }
    const BoundaryPoint& boundary_point() const { return boundary_; }
    long long direct_order() const { return direct_order_; }
    const std::array<long long, 3>& direct_base() const { return direct_base_; }
    const std::array<long long, 2>& direct_fiber() const { return direct_fiber_; }

    /// The central involution paired with the generator, with a zero
    /// translation block of matching rank.
    KugaElement sigma() const {
        KugaElement::LMat zeros(gamma_ ? gamma_->translation_rows() : 0,
                                {0, 0, 0, 0});
        Mat4 form = gamma_ ? gamma_->gamma().form() : standard_form();
        return KugaElement(std::move(zeros),
                           SpElement(preset_minus1_matrix(), form));
    }

  private:
    Scenario() = default;

    Locus locus_ = Locus::interior;
    SiegelPoint tau_{};
    BoundaryPoint boundary_{};
    std::optional<KugaElement> gamma_;
    long long direct_order_ = 1;
    std::array<long long, 3> direct_base_{};
    std::array<long long, 2> direct_fiber_{};
    int n_ = 0;
    bool include_sigma_ = false;
};

/// Scenario-level entry point for the boundary computation; rejects
/// scenarios that do not sit at a rank-1 boundary point.
inline SingularityType boundary_type(const KugaElement& g, const Scenario& s,
                                     int n,
                                     double snap_tol = kDefaultSnapTol) {
    if (s.locus() != Locus::boundary_rank1)
        throw WrongLocus("boundary_type: scenario locus is not boundary-rank1");
    if (s.is_direct())
        throw std::invalid_argument("boundary_type: scenario has no matrix data");
    return boundary_type(g, s.boundary_point(), n, snap_tol);
}

/// One table cell: powers (k1, k2) of the generator and the involution, and
/// the resulting type; the identity cell carries no type.
struct TableRow {
    int k1 = 0;
    int k2 = 0;
    std::optional<SingularityType> type;
};

namespace detail {

inline SingularityType scenario_type(const Scenario& s, const KugaElement& g,
                                     double snap_tol) {
    if (s.locus() == Locus::interior)
        return interior_type(g, s.tau(), s.n(), snap_tol);
    return boundary_type(g, s.boundary_point(), s.n(), snap_tol);
}

/// Exponent vector of the (k1, k2) cell of a direct scenario, over the
/// common denominator d.
inline std::vector<long long> direct_cell(const Scenario& s, int k1, int k2,
                                          long long d) {
    long long k = s.direct_order();
    std::vector<long long> vec;
    std::size_t base_slots = 3;
    std::size_t total = base_slots + 2 * static_cast<std::size_t>(s.n());
    vec.reserve(total);
    auto gen_at = [&](std::size_t i) -> long long {
        if (i < 3)
            return s.direct_base()[i];
        std::size_t fi = i - 3;
        return fi < static_cast<std::size_t>(s.n()) ? s.direct_fiber()[0]
                                                    : s.direct_fiber()[1];
    };
    for (std::size_t i = 0; i < total; ++i) {
        long long sigma_exp = i < 3 ? 0 : 1; // involution: trivial on base, -1 on fiber
        long long v = (k1 * gen_at(i) * (d / k) + k2 * sigma_exp * (d / 2)) % d;
        vec.push_back(v);
    }
    return vec;
}

inline std::vector<SlotLabel> direct_labels(const Scenario& s) {
    std::vector<SlotLabel> labels;
    if (s.locus() == Locus::interior)
        labels.assign(3, SlotLabel::base_h2);
    else
        labels = {SlotLabel::base_f, SlotLabel::base_v, SlotLabel::base_torus};
    labels.insert(labels.end(), 2 * static_cast<std::size_t>(s.n()),
                  SlotLabel::fiber);
    return labels;
}

} // namespace detail

/// Every singularity type due to a nontrivial power product of the
/// generator and (optionally) the involution, laid out as in the source
/// tables: one cell per (k1, k2), each written over the lcm of the orders
/// of the generators actually appearing in the cell.
inline std::vector<TableRow> build_table(const Scenario& s,
                                         double snap_tol = kDefaultSnapTol) {
    std::vector<TableRow> rows;
    const int k2_max = s.include_sigma() ? 1 : 0;

    if (s.is_direct()) {
        long long k = s.direct_order();
        long long full = std::lcm(k, 2LL);
        for (int k1 = 0; k1 < k; ++k1)
            for (int k2 = 0; k2 <= k2_max; ++k2) {
                long long d = std::lcm(k1 > 0 ? k : 1LL, k2 > 0 ? 2LL : 1LL);
                if (k1 == 0 && k2 == 0) {
                    rows.push_back({k1, k2, std::nullopt});
                    continue;
                }
                std::vector<long long> vec = detail::direct_cell(s, k1, k2, full);
                bool trivial = std::all_of(vec.begin(), vec.end(),
                                           [](long long v) { return v == 0; });
                if (trivial) {
                    rows.push_back({k1, k2, std::nullopt});
                    continue;
                }
                // rewrite over the row denominator d
                for (long long& v : vec)
                    v = v * d / full % d; // exact: every cell order divides d
                rows.push_back({k1, k2,
                                SingularityType(d, std::move(vec),
                                                detail::direct_labels(s))});
            }
        return rows;
    }

    const KugaElement& gamma = s.gamma();
    long long kg = detail::element_order(gamma.gamma());
    KugaElement sigma = s.sigma();
    long long ks = detail::element_order(sigma.gamma());

    KugaElement acc(KugaElement::LMat(gamma.translation_rows(), {0, 0, 0, 0}),
                    SpElement::identity(gamma.gamma().form()));
    for (int k1 = 0; k1 < kg; ++k1) {
        KugaElement elem = acc;
        for (int k2 = 0; k2 <= k2_max; ++k2) {
            if (elem.is_identity()) {
                rows.push_back({k1, k2, std::nullopt});
            } else {
                SingularityType t = detail::scenario_type(s, elem, snap_tol);
                long long d = std::lcm(k1 > 0 ? kg : 1LL, k2 > 0 ? ks : 1LL);
                rows.push_back({k1, k2, t.rescaled(d)});
            }
            elem = elem * sigma;
        }
        acc = acc * gamma;
    }
    return rows;
}

enum class VerdictStatus { canonical, not_canonical, indeterminate_quasi_reflection };

inline const char* verdict_status_name(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::canonical:
        return "canonical";
    case VerdictStatus::not_canonical:
        return "not-canonical";
    case VerdictStatus::indeterminate_quasi_reflection:
        return "indeterminate-quasi-reflection";
    }
    return "?";
}

struct Witness {
    int k1 = 0;
    int k2 = 0;
    SingularityType type;
    Rational rst;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::canonical;
    std::optional<Witness> witness;
    std::vector<TableRow> table;
};

/// Run the criterion over the closure of the scenario's generators: any
/// nontrivial quasi-reflection makes the verdict indeterminate; otherwise
/// the singularity is canonical exactly when every nontrivial element has
/// RST sum >= 1 (exact rational comparison). The witness records the
/// minimal element when the criterion fails.
inline Verdict analyze(const Scenario& s, double snap_tol = kDefaultSnapTol) {
    Verdict v;
    v.table = build_table(s, snap_tol);

    struct Entry {
        int k1, k2;
        SingularityType type;
    };
    std::vector<Entry> entries;
    std::set<std::vector<long long>> seen; // dedupe repeated group elements

    if (s.is_direct()) {
        long long k = s.direct_order();
        long long full = std::lcm(k, 2LL);
        for (int k1 = 0; k1 < k; ++k1)
            for (int k2 = 0; k2 <= (s.include_sigma() ? 1 : 0); ++k2) {
                std::vector<long long> vec = detail::direct_cell(s, k1, k2, full);
                if (std::all_of(vec.begin(), vec.end(),
                                [](long long x) { return x == 0; }))
                    continue; // acts trivially: not a nontrivial element
                if (!seen.insert(vec).second)
                    continue;
                entries.push_back(
                    {k1, k2,
                     SingularityType(full, vec, detail::direct_labels(s))});
            }
    } else {
        const KugaElement& gamma = s.gamma();
        long long kg = detail::element_order(gamma.gamma());
        KugaElement sigma = s.sigma();
        KugaElement acc_gamma(KugaElement::LMat(gamma.translation_rows(),
                                                {0, 0, 0, 0}),
                              SpElement::identity(gamma.gamma().form()));
        for (int k1 = 0; k1 < kg; ++k1) {
            KugaElement elem = acc_gamma;
            for (int k2 = 0; k2 <= (s.include_sigma() ? 1 : 0); ++k2) {
                if (!elem.is_identity() && seen.insert(elem.flatten()).second)
                    entries.push_back(
                        {k1, k2, detail::scenario_type(s, elem, snap_tol)});
                elem = elem * sigma;
            }
            acc_gamma = acc_gamma * gamma;
        }
    }

    bool has_qr = false;
    std::optional<Entry> min_entry;
    std::optional<Rational> min_rst;
    for (const Entry& e : entries) {
        if (e.type.is_quasi_reflection())
            has_qr = true;
        Rational r = e.type.rst_sum();
        if (!min_rst || r < *min_rst) {
            min_rst = r;
            min_entry = e;
        }
    }

    if (has_qr) {
        v.status = VerdictStatus::indeterminate_quasi_reflection;
        return v;
    }
    if (min_rst && *min_rst < Rational(1)) {
        v.status = VerdictStatus::not_canonical;
        v.witness = Witness{min_entry->k1, min_entry->k2, min_entry->type,
                            *min_rst};
        return v;
    }
    v.status = VerdictStatus::canonical;
    return v;
}

/// Grid rendering of a table, mirroring the row/column layout of the source
/// material: k1 rows, k2 columns, identity cell printed as N/A.
inline std::string render_table(const std::vector<TableRow>& rows) {
    int k1_max = 0, k2_max = 0;
    for (const TableRow& r : rows) {
        k1_max = std::max(k1_max, r.k1);
        k2_max = std::max(k2_max, r.k2);
    }
    std::vector<std::vector<std::string>> cells(
        static_cast<std::size_t>(k1_max) + 1,
        std::vector<std::string>(static_cast<std::size_t>(k2_max) + 1, ""));
    for (const TableRow& r : rows)
        cells[r.k1][r.k2] = r.type ? r.type->str() : "N/A";

    std::vector<std::size_t> widths(static_cast<std::size_t>(k2_max) + 2);
    widths[0] = std::string("k1\\k2").size();
    for (int k1 = 0; k1 <= k1_max; ++k1)
        widths[0] = std::max(widths[0], std::to_string(k1).size());
    for (int k2 = 0; k2 <= k2_max; ++k2) {
        std::size_t w = std::to_string(k2).size();
        for (int k1 = 0; k1 <= k1_max; ++k1)
            w = std::max(w, cells[k1][k2].size());
        widths[static_cast<std::size_t>(k2) + 1] = w;
    }

    auto line = [&](const std::vector<std::string>& fields) {
        std::string out;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            std::string f = fields[i];
            if (i + 1 < fields.size())
                f.resize(widths[i], ' ');
            out += f;
            if (i + 1 < fields.size())
                out += " | ";
        }
        return out;
    };

    std::ostringstream os;
    std::vector<std::string> header = {"k1\\k2"};
    for (int k2 = 0; k2 <= k2_max; ++k2)
        header.push_back(std::to_string(k2));
    os << line(header) << "\n";
    std::string divider;
    for (std::size_t i = 0; i + 1 < widths.size(); ++i) {
        if (i)
            divider += "+";
        divider += std::string(widths[i] + (i == 0 ? 1 : 2), '-');
    }
    divider += "+" + std::string(widths.back() + 1, '-');
    os << divider << "\n";
    for (int k1 = 0; k1 <= k1_max; ++k1) {
        std::vector<std::string> fields = {std::to_string(k1)};
        for (int k2 = 0; k2 <= k2_max; ++k2)
            fields.push_back(cells[k1][k2]);
        os << line(fields) << "\n";
    }
    return os.str();
}

// ---- preset scenarios ----

/// Interior scenario at diag(rho, tau3): the order-6 curve stabilizer.
inline Scenario preset_c2_scenario(int n, bool include_sigma,
                                   cplx tau3 = cplx(0.0, 2.0)) {
    SiegelPoint tau{rho_point(), cplx(0.0), tau3};
    KugaElement g(KugaElement::LMat(n, {0, 0, 0, 0}),
                  SpElement(preset_c2_matrix()));
    return Scenario::interior(tau, std::move(g), n, include_sigma);
}

/// Rank-1 cusp scenario at (rho, 0, 0), order-6 stabilizer.
inline Scenario preset_q2_scenario(int n, bool include_sigma) {
    BoundaryPoint q{rho_point(), cplx(0.0), cplx(0.0)};
    KugaElement g(KugaElement::LMat(n, {0, 0, 0, 0}),
                  SpElement(preset_c2_matrix()));
    return Scenario::boundary(q, std::move(g), n, include_sigma);
}

/// Rank-1 cusp scenario at (i, 0, 0), order-4 stabilizer.
inline Scenario preset_q1_scenario(int n, bool include_sigma) {
    BoundaryPoint q{cplx(0.0, 1.0), cplx(0.0), cplx(0.0)};
    KugaElement g(KugaElement::LMat(n, {0, 0, 0, 0}),
                  SpElement(preset_q1_matrix()));
    return Scenario::boundary(q, std::move(g), n, include_sigma);
}

/// Interior curve with an order-4 stabilizer known only through its tangent
/// exponents: base (2,3,0), fiber (1,2) over 4.
inline Scenario preset_c1_scenario(int n, bool include_sigma) {
    return Scenario::direct(4, {2, 3, 0}, {1, 2}, n, include_sigma,
                            Locus::interior);
}

inline std::optional<Scenario> preset_scenario(const std::string& name, int n,
                                               bool include_sigma) {
    if (name == "C1")
        return preset_c1_scenario(n, include_sigma);
    if (name == "C2")
        return preset_c2_scenario(n, include_sigma);
    if (name == "Q1")
        return preset_q1_scenario(n, include_sigma);
    if (name == "Q2")
        return preset_q2_scenario(n, include_sigma);
    return std::nullopt;
}

} // namespace kuga
