#include "zkn/hom_calc.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>

namespace zkn {

namespace {

void check_params(const ModuliParams& a, const ModuliParams& b)
{
    if (!(a == b))
        throw InvalidInput("moduli parameters differ");
}

/// Row lookup for the band basis.
class RowIndex {
public:
    explicit RowIndex(const std::vector<Monomial>& rows)
    {
        for (std::size_t n = 0; n < rows.size(); ++n)
            index_.emplace(rows[n], static_cast<Eigen::Index>(n));
    }

    void write_column(RationalMatrix& m, Eigen::Index col, const RingElem& value) const
    {
        for (const auto& t : value.terms()) {
            auto it = index_.find(t.mono);
            if (it == index_.end())
                throw ConsistencyFailure("band term outside the Ext^1 basis");
            m(it->second, col) = t.coeff;
        }
    }

private:
    std::map<Monomial, Eigen::Index> index_;
};

/// p' (z^{-j} p c)^+ + p (z^{-j} p' c)^+ - z^{-j} p p' c: the c-dependent part
/// of the witness cocycle.
RingElem c_contribution(const RingElem& c, const RingElem& p, const RingElem& q, int j)
{
    const RingElem x = (p * c).shift_z(-j);
    const RingElem x_target = (q * c).shift_z(-j);
    return q * plus_part(x) + p * plus_part(x_target) - q * x;
}

Eigen::Index find_index(const std::vector<Monomial>& basis, Monomial mono)
{
    for (std::size_t n = 0; n < basis.size(); ++n)
        if (basis[n] == mono)
            return static_cast<Eigen::Index>(n);
    throw ConsistencyFailure("monomial missing from basis");
}

RingElem from_coefficients(const RingParams& ring, const std::vector<Monomial>& basis, const RationalMatrix& v,
                           Eigen::Index offset)
{
    std::vector<Term<Rational>> terms;
    for (std::size_t n = 0; n < basis.size(); ++n) {
        const Rational& x = v(offset + static_cast<Eigen::Index>(n), 0);
        if (!x.is_zero())
            terms.push_back({basis[n], x});
    }
    return RingElem::from_terms(ring, std::move(terms));
}

}  // namespace

RingElem witness_cocycle(const GroupElem& g, const ExtClass& p, const ExtClass& p_target)
{
    check_params(g.params(), p.params());
    check_params(p.params(), p_target.params());
    const RingElem& pp = p.p();
    const RingElem& qq = p_target.p();
    return qq * g.d().rep() - g.a().rep() * pp + c_contribution(g.c().rep(), pp, qq, p.params().j);
}

bool witness_condition(const GroupElem& g, const ExtClass& p, const ExtClass& p_target)
{
    const bool holds = class_is_zero(witness_cocycle(g, p, p_target), p.params());
    if (holds && !(act(g, p) == p_target))
        throw ConsistencyFailure("witness condition holds but act(g, p) differs from p'");
    return holds;
}

LinearSystem witness_system(const ExtClass& p, const ExtClass& p_target)
{
    check_params(p.params(), p_target.params());
    const ModuliParams& params = p.params();
    const RingParams& ring = params.ring;
    const int j = params.j;
    LinearSystem sys;
    sys.section_index = h0_basis(0, ring);
    sys.c_index = h0_basis(2 * j, ring);
    sys.rows = ext1_basis(params);
    const RowIndex rows(sys.rows);
    sys.matrix = RationalMatrix::Zero(static_cast<Eigen::Index>(sys.rows.size()),
                                      static_cast<Eigen::Index>(2 * sys.section_index.size() + sys.c_index.size()));

    for (std::size_t n = 0; n < sys.section_index.size(); ++n) {
        const RingElem e = RingElem::monomial(ring, sys.section_index[n].i, sys.section_index[n].l);
        rows.write_column(sys.matrix, sys.a_column(n), band_part(-(e * p.p()), j));
        rows.write_column(sys.matrix, sys.d_column(n), band_part(e * p_target.p(), j));
    }
    for (std::size_t n = 0; n < sys.c_index.size(); ++n) {
        const RingElem e = RingElem::monomial(ring, sys.c_index[n].i, sys.c_index[n].l);
        rows.write_column(sys.matrix, sys.c_column(n), band_part(c_contribution(e, p.p(), p_target.p(), j), j));
    }
    return sys;
}

std::optional<GroupElem> isom_decide(const ExtClass& p, const ExtClass& p_target)
{
    const LinearSystem sys = witness_system(p, p_target);
    const ModuliParams& params = p.params();
    const RingParams& ring = params.ring;
    const RationalMatrix kernel = nullspace<Rational>(sys.matrix);
    const Eigen::Index r = kernel.cols();
    const std::size_t constant = static_cast<std::size_t>(find_index(sys.section_index, {0, 0}));
    const Eigen::Index a00 = sys.a_column(constant);
    const Eigen::Index d00 = sys.d_column(constant);

    auto vanishes = [&](Eigen::Index row) {
        for (Eigen::Index col = 0; col < r; ++col)
            if (!kernel(row, col).is_zero())
                return false;
        return true;
    };
    if (vanishes(a00) || vanishes(d00))
        return std::nullopt;

    // a00 and d00 are nonzero polynomials of degree < r along the curve
    // sum_t x^t v_t, so their product has at most 2r - 2 roots.
    for (long x = 0; x <= 2 * static_cast<long>(r) - 2; ++x) {
        RationalMatrix v = RationalMatrix::Zero(kernel.rows(), 1);
        Rational power(1);
        for (Eigen::Index t = 0; t < r; ++t) {
            v += kernel.col(t) * power;
            power = power * Rational(x);
        }
        if (v(a00, 0).is_zero() || v(d00, 0).is_zero())
            continue;
        const GroupElem g(params, TwistedSection(0, from_coefficients(ring, sys.section_index, v, sys.a_column(0))),
                          TwistedSection::zero(-2 * params.j, ring),
                          TwistedSection(2 * params.j, from_coefficients(ring, sys.c_index, v, sys.c_column(0))),
                          TwistedSection(0, from_coefficients(ring, sys.section_index, v, sys.d_column(0))));
        if (!(act(g, p) == p_target))
            throw ConsistencyFailure("isom_decide: witness does not carry p to p'");
        return g;
    }
    throw ConsistencyFailure("isom_decide: no invertible point found on the solution space");
}

SpectralDifferentials spectral_differentials(const ExtClass& p, const ExtClass& p_target)
{
    check_params(p.params(), p_target.params());
    const ModuliParams& params = p.params();
    const RingParams& ring = params.ring;
    const int j = params.j;
    const std::vector<Monomial> sections = h0_basis(0, ring);
    const std::vector<Monomial> c_basis = h0_basis(2 * j, ring);
    SpectralDifferentials out;
    out.rows = ext1_basis(params);
    const RowIndex rows(out.rows);
    const auto n_rows = static_cast<Eigen::Index>(out.rows.size());
    const auto n_sections = static_cast<Eigen::Index>(sections.size());

    out.d1 = RationalMatrix::Zero(n_rows, 2 * n_sections);
    for (std::size_t n = 0; n < sections.size(); ++n) {
        const RingElem e = RingElem::monomial(ring, sections[n].i, sections[n].l);
        const auto col = static_cast<Eigen::Index>(n);
        rows.write_column(out.d1, col, band_part(-(e * p.p()), j));
        rows.write_column(out.d1, n_sections + col, band_part(e * p_target.p(), j));
    }

    // d2(c) = delta_U p' - alpha_V p with delta_U = (z^{-j} p c)^+ and
    // alpha_V = (z^{-j} p' c)^-.
    RationalMatrix d2 = RationalMatrix::Zero(n_rows, static_cast<Eigen::Index>(c_basis.size()));
    for (std::size_t n = 0; n < c_basis.size(); ++n) {
        const RingElem e = RingElem::monomial(ring, c_basis[n].i, c_basis[n].l);
        const RingElem delta_u = plus_part((p.p() * e).shift_z(-j));
        const RingElem alpha_v = minus_part((p_target.p() * e).shift_z(-j));
        rows.write_column(d2, static_cast<Eigen::Index>(n), band_part(delta_u * p_target.p() - alpha_v * p.p(), j));
    }
    out.d2 = reduce_modulo_columns<Rational>(out.d1, d2);
    return out;
}

long split_end_dim(const ModuliParams& params)
{
    const RingParams& ring = params.ring;
    return 2 * h0_dim(0, ring) + h0_dim(2 * params.j, ring) + h0_dim(-2 * params.j, ring);
}

long split_ext1_dim(const ModuliParams& params) { return h1_dim(-2 * params.j, params.ring); }

HomProfile hom_ext_dims(const ExtClass& p, const ExtClass& p_target)
{
    const SpectralDifferentials diff = spectral_differentials(p, p_target);
    const ModuliParams& params = p.params();
    HomProfile out;
    out.dim_hom_L2L1 = h0_dim(-2 * params.j, params.ring);
    out.dim_ker_d1 = static_cast<long>(diff.d1.cols() - rank<Rational>(diff.d1));
    out.dim_ker_d2 = static_cast<long>(diff.d2.cols() - rank<Rational>(diff.d2));
    out.dim_hom = out.dim_hom_L2L1 + out.dim_ker_d1 + out.dim_ker_d2;
    out.dim_ext1 = out.dim_hom - split_end_dim(params) + split_ext1_dim(params);
    if (out.dim_ext1 < 0)
        throw ConsistencyFailure("hom_ext_dims: negative Ext^1 dimension");
    return out;
}

int default_degree_bound(const ModuliParams& params) { return params.k() * (params.m() - 1) + 2 * params.j + 1; }

namespace {

enum Entry { kA11, kA12, kA21, kA22, kB11, kB12, kB21, kB22 };

struct Unknown {
    Entry entry;
    Monomial mono;
};

/// The unknowns of the brute-force system at degree bound D.
std::vector<Unknown> brute_force_unknowns(const RingParams& ring, int degree)
{
    std::vector<Unknown> out;
    for (Entry e : {kA11, kA12, kA21, kA22})
        for (int i = 0; i < ring.m; ++i)
            for (int l = 0; l <= degree; ++l)
                out.push_back({e, {i, l}});
    for (Entry e : {kB11, kB12, kB21, kB22})
        for (int i = 0; i < ring.m; ++i)
            for (int l = ring.k * i - degree; l <= ring.k * i; ++l)
                out.push_back({e, {i, l}});
    return out;
}

struct BruteForceSystem {
    std::vector<Unknown> unknowns;
    RationalMatrix matrix;
};

/// Rows are the monomials of the four entries of B E_p - E_p' A.
BruteForceSystem brute_force_system(const ExtClass& p, const ExtClass& p_target, int degree)
{
    const RingParams& ring = p.params().ring;
    const int j = p.params().j;
    BruteForceSystem sys;
    sys.unknowns = brute_force_unknowns(ring, degree);

    std::map<std::pair<int, Monomial>, Eigen::Index> row_of;
    std::vector<std::vector<std::pair<Eigen::Index, Rational>>> columns(sys.unknowns.size());
    for (std::size_t n = 0; n < sys.unknowns.size(); ++n) {
        const Unknown& u = sys.unknowns[n];
        const RingElem e = RingElem::monomial(ring, u.mono.i, u.mono.l);
        std::vector<std::pair<int, RingElem>> contributions;
        switch (u.entry) {
        case kA11: contributions = {{0, -e.shift_z(j)}}; break;
        case kA12: contributions = {{1, -e.shift_z(j)}}; break;
        case kA21: contributions = {{0, -(p_target.p() * e)}, {2, -e.shift_z(-j)}}; break;
        case kA22: contributions = {{1, -(p_target.p() * e)}, {3, -e.shift_z(-j)}}; break;
        case kB11: contributions = {{0, e.shift_z(j)}, {1, e * p.p()}}; break;
        case kB12: contributions = {{1, e.shift_z(-j)}}; break;
        case kB21: contributions = {{2, e.shift_z(j)}, {3, e * p.p()}}; break;
        case kB22: contributions = {{3, e.shift_z(-j)}}; break;
        }
        for (const auto& [equation, value] : contributions) {
            for (const auto& t : value.terms()) {
                auto [it, inserted] = row_of.try_emplace({equation, t.mono}, static_cast<Eigen::Index>(row_of.size()));
                columns[n].push_back({it->second, t.coeff});
            }
        }
    }
    sys.matrix = RationalMatrix::Zero(static_cast<Eigen::Index>(row_of.size()),
                                      static_cast<Eigen::Index>(sys.unknowns.size()));
    for (std::size_t n = 0; n < columns.size(); ++n)
        for (const auto& [row, value] : columns[n])
            sys.matrix(row, static_cast<Eigen::Index>(n)) += value;
    return sys;
}

}  // namespace

BruteForceResult brute_force_hom(const ExtClass& p, const ExtClass& p_target, std::optional<int> degree)
{
    check_params(p.params(), p_target.params());
    const int bound = degree.value_or(default_degree_bound(p.params()));
    if (bound < 1)
        throw InvalidInput("degree bound must be >= 1, got " + std::to_string(bound));
    const RingParams& ring = p.params().ring;

    const BruteForceSystem sys = brute_force_system(p, p_target, bound);
    const RationalMatrix kernel = nullspace<Rational>(sys.matrix);
    const BruteForceSystem wider = brute_force_system(p, p_target, bound + 1);
    const Eigen::Index wider_dim = wider.matrix.cols() - rank<Rational>(wider.matrix);
    if (wider_dim != kernel.cols())
        throw ConsistencyFailure("degree bound too small: dimension " + std::to_string(kernel.cols()) + " at D = "
                                 + std::to_string(bound) + " but " + std::to_string(wider_dim) + " at D + 1");

    BruteForceResult out;
    out.dim = static_cast<long>(kernel.cols());
    out.degree = bound;
    for (Eigen::Index col = 0; col < kernel.cols(); ++col) {
        std::array<std::vector<Term<Rational>>, 8> terms;
        for (std::size_t n = 0; n < sys.unknowns.size(); ++n) {
            const Rational& x = kernel(static_cast<Eigen::Index>(n), col);
            if (!x.is_zero())
                terms[sys.unknowns[n].entry].push_back({sys.unknowns[n].mono, x});
        }
        CocyclePair pair;
        for (int e = 0; e < 4; ++e) {
            pair.A.e[static_cast<std::size_t>(e)] = RingElem::from_terms(ring, std::move(terms[static_cast<std::size_t>(e)]));
            pair.B.e[static_cast<std::size_t>(e)] =
                RingElem::from_terms(ring, std::move(terms[static_cast<std::size_t>(e + 4)]));
        }
        out.basis.push_back(std::move(pair));
    }
    return out;
}

}  // namespace zkn
