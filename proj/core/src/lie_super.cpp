#include <superint/errors.hpp>
#include <superint/lie_super.hpp>

namespace superint
{

namespace
{

bool is_zero_vector(const LieVector &v)
{
    for (const auto &c : v) {
        if (sgn(c) != 0) {
            return false;
        }
    }
    return true;
}

LieVector axpy(LieVector y, const Rational &a, const LieVector &x)
{
    for (std::size_t k = 0; k < y.size(); ++k) {
        y[k] += a * x[k];
    }
    return y;
}

std::string vector_str(const LieSuperAlgebra &g, const LieVector &v)
{
    std::string out;
    for (unsigned k = 0; k < v.size(); ++k) {
        if (sgn(v[k]) == 0) {
            continue;
        }
        detail::append_term(out, Scalar(v[k]), g.basis()[k].name);
    }
    return out.empty() ? "0" : out;
}

} // namespace

LieSuperAlgebra::LieSuperAlgebra(std::vector<LieGenerator> basis, Table table)
    : m_basis(std::move(basis)), m_table(std::move(table))
{
    const std::size_t n = m_basis.size();
    if (m_table.size() != n) {
        throw DimensionError("structure constant table has wrong size");
    }
    for (const auto &row : m_table) {
        if (row.size() != n) {
            throw DimensionError("structure constant table has wrong size");
        }
        for (const auto &v : row) {
            if (v.size() != n) {
                throw DimensionError("bracket vector has wrong length");
            }
        }
    }
}

LieSuperAlgebra LieSuperAlgebra::from_brackets(std::vector<LieGenerator> basis,
                                               const std::map<std::pair<unsigned, unsigned>, LieVector> &brackets)
{
    const unsigned n = static_cast<unsigned>(basis.size());
    Table t(n, std::vector<LieVector>(n, LieVector(n)));
    for (const auto &[ij, v] : brackets) {
        const auto [i, j] = ij;
        if (i >= n || j >= n) {
            throw DimensionError("bracket index out of range");
        }
        if (v.size() != n) {
            throw DimensionError("bracket vector has wrong length");
        }
        t[i][j] = v;
        if (!brackets.contains({j, i})) {
            const int s = koszul_sign(basis[i].parity, basis[j].parity);
            for (unsigned k = 0; k < n; ++k) {
                t[j][i][k] = -s * v[k];
            }
        }
    }
    return LieSuperAlgebra(std::move(basis), std::move(t));
}

LieVector LieSuperAlgebra::bracket(const LieVector &x, const LieVector &y) const
{
    LieVector out(dim());
    for (unsigned i = 0; i < dim(); ++i) {
        if (sgn(x[i]) == 0) {
            continue;
        }
        for (unsigned j = 0; j < dim(); ++j) {
            if (sgn(y[j]) != 0) {
                out = axpy(std::move(out), x[i] * y[j], m_table[i][j]);
            }
        }
    }
    return out;
}

LieVector LieSuperAlgebra::unit_vector(unsigned i) const
{
    LieVector v(dim());
    v.at(i) = 1;
    return v;
}

std::optional<Parity> LieSuperAlgebra::parity(const LieVector &x) const
{
    std::optional<Parity> p;
    for (unsigned i = 0; i < dim(); ++i) {
        if (sgn(x[i]) == 0) {
            continue;
        }
        if (p && *p != m_basis[i].parity) {
            return std::nullopt;
        }
        p = m_basis[i].parity;
    }
    return p.value_or(Parity::even);
}

std::vector<unsigned> LieSuperAlgebra::graded_order() const
{
    std::vector<unsigned> out;
    for (Parity par : {Parity::even, Parity::odd}) {
        for (unsigned i = 0; i < dim(); ++i) {
            if (m_basis[i].parity == par) {
                out.push_back(i);
            }
        }
    }
    return out;
}

unsigned LieSuperAlgebra::even_dim() const
{
    unsigned c = 0;
    for (const auto &b : m_basis) {
        c += b.parity == Parity::even;
    }
    return c;
}

unsigned LieSuperAlgebra::odd_dim() const
{
    return dim() - even_dim();
}

std::optional<unsigned> LieSuperAlgebra::index_of(const std::string &name) const
{
    for (unsigned i = 0; i < dim(); ++i) {
        if (m_basis[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

LieValidation validate(const LieSuperAlgebra &g)
{
    const unsigned n = g.dim();
    const auto &b = g.basis();
    auto name = [&](unsigned i) { return b[i].name; };
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            const auto &v = g.bracket_basis(i, j);
            for (unsigned k = 0; k < n; ++k) {
                if (sgn(v[k]) != 0 && b[k].parity != b[i].parity + b[j].parity) {
                    return {false, "parity: [" + name(i) + ", " + name(j) + "] has a component along " + name(k)};
                }
            }
        }
    }
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i; j < n; ++j) {
            const int s = koszul_sign(b[i].parity, b[j].parity);
            const auto lhs = g.bracket_basis(i, j);
            const auto rhs = g.bracket_basis(j, i);
            for (unsigned k = 0; k < n; ++k) {
                if (lhs[k] != -s * rhs[k]) {
                    return {false, "antisymmetry: [" + name(i) + ", " + name(j) + "] = " + vector_str(g, lhs)
                                       + " but [" + name(j) + ", " + name(i) + "] = " + vector_str(g, rhs)};
                }
            }
        }
    }
    // [x, [y, z]] = [[x, y], z] + (-1)^{|x||y|} [y, [x, z]]
    for (unsigned i = 0; i < n; ++i) {
        const auto x = g.unit_vector(i);
        for (unsigned j = 0; j < n; ++j) {
            const auto y = g.unit_vector(j);
            for (unsigned k = 0; k < n; ++k) {
                const auto z = g.unit_vector(k);
                const auto lhs = g.bracket(x, g.bracket(y, z));
                auto rhs = g.bracket(g.bracket(x, y), z);
                rhs = axpy(std::move(rhs), Rational(koszul_sign(b[i].parity, b[j].parity)),
                           g.bracket(y, g.bracket(x, z)));
                if (lhs != rhs) {
                    return {false, "jacobi: (" + name(i) + ", " + name(j) + ", " + name(k) + ")"};
                }
            }
        }
    }
    return {};
}

namespace
{

// Matrix of v -> proj(bracket(x, e_col)) on the listed indices (graded order).
ScalarSuperMatrix action_matrix(const LieSuperAlgebra &g, const LieVector &x, const std::vector<unsigned> &idx)
{
    const auto px = g.parity(x);
    if (!px) {
        throw ParityError("adjoint action of an inhomogeneous element");
    }
    const unsigned n = static_cast<unsigned>(idx.size());
    unsigned p = 0;
    for (unsigned i : idx) {
        p += g.basis()[i].parity == Parity::even;
    }
    const GrassmannElement zero(0);
    std::vector<GrassmannElement> entries(n * n, zero);
    for (unsigned c = 0; c < n; ++c) {
        const auto img = g.bracket(x, g.unit_vector(idx[c]));
        for (unsigned r = 0; r < n; ++r) {
            entries[r * n + c] = GrassmannElement(0, Scalar(img[idx[r]]));
        }
    }
    return ScalarSuperMatrix(p, n - p, std::move(entries), zero, *px);
}

} // namespace

ScalarSuperMatrix ad(const LieSuperAlgebra &g, const LieVector &x)
{
    if (x.size() != g.dim()) {
        throw DimensionError("element has wrong length");
    }
    return action_matrix(g, x, g.graded_order());
}

Rational scalar_supertrace(const ScalarSuperMatrix &m)
{
    const auto s = supertrace(m);
    return s.body().rational();
}

std::vector<unsigned> SubalgebraSpec::complement(const LieSuperAlgebra &g) const
{
    std::vector<unsigned> out;
    for (unsigned i : g.graded_order()) {
        bool in_h = false;
        for (unsigned k : span) {
            in_h = in_h || k == i;
        }
        if (!in_h) {
            out.push_back(i);
        }
    }
    return out;
}

void check_subalgebra(const LieSuperAlgebra &g, const SubalgebraSpec &h)
{
    std::vector<bool> in_h(g.dim(), false);
    for (unsigned i : h.span) {
        if (i >= g.dim()) {
            throw DimensionError("subalgebra index " + std::to_string(i) + " out of range");
        }
        in_h[i] = true;
    }
    for (unsigned i : h.span) {
        for (unsigned j : h.span) {
            const auto &v = g.bracket_basis(i, j);
            for (unsigned k = 0; k < g.dim(); ++k) {
                if (!in_h[k] && sgn(v[k]) != 0) {
                    throw StructuralError("not a subalgebra: [" + g.basis()[i].name + ", " + g.basis()[j].name
                                          + "] leaves the span");
                }
            }
        }
    }
}

ScalarSuperMatrix quotient_action(const LieSuperAlgebra &g, const SubalgebraSpec &h, const LieVector &x)
{
    check_subalgebra(g, h);
    for (unsigned k : h.complement(g)) {
        if (sgn(x.at(k)) != 0) {
            throw StructuralError("quotient action of an element outside h");
        }
    }
    return action_matrix(g, x, h.complement(g));
}

std::string UnimodularityVerdict::str(const LieSuperAlgebra &g) const
{
    std::string out = unimodular ? "UNIMODULAR" : "NOT_UNIMODULAR";
    if (witness) {
        out += " witness=" + g.basis()[*witness].name + " str=" + to_string(supertrace);
    }
    return out;
}

UnimodularityVerdict unimodularity_check(const LieSuperAlgebra &g, const SubalgebraSpec &h)
{
    check_subalgebra(g, h);
    UnimodularityVerdict v;
    for (unsigned i : h.span) {
        const Rational s = scalar_supertrace(quotient_action(g, h, g.unit_vector(i)));
        if (sgn(s) != 0) {
            v.unimodular = false;
            v.witness = i;
            v.supertrace = s;
            return v;
        }
    }
    return v;
}

LieSuperAlgebra change_basis(const LieSuperAlgebra &g, const RationalMatrix &p, std::vector<std::string> names)
{
    const unsigned n = g.dim();
    if (p.rows() != n || p.cols() != n) {
        throw DimensionError("basis change matrix has wrong size");
    }
    std::vector<Parity> parity(n, Parity::even);
    for (unsigned i = 0; i < n; ++i) {
        std::optional<Parity> col;
        for (unsigned a = 0; a < n; ++a) {
            if (sgn(p(a, i)) == 0) {
                continue;
            }
            if (col && *col != g.basis()[a].parity) {
                throw ParityError("basis change mixes parities");
            }
            col = g.basis()[a].parity;
        }
        parity[i] = col.value_or(Parity::even);
    }
    const RationalMatrix pinv = inverse(p);
    if (names.empty()) {
        for (unsigned i = 0; i < n; ++i) {
            names.push_back("f" + std::to_string(i + 1));
        }
    }
    if (names.size() != n) {
        throw DimensionError("wrong number of generator names");
    }
    std::vector<LieGenerator> basis;
    std::vector<LieVector> cols(n, LieVector(n));
    for (unsigned i = 0; i < n; ++i) {
        basis.push_back({names[i], parity[i]});
        for (unsigned a = 0; a < n; ++a) {
            cols[i][a] = p(a, i);
        }
    }
    LieSuperAlgebra::Table t(n, std::vector<LieVector>(n, LieVector(n)));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            const auto old = g.bracket(cols[i], cols[j]);
            for (unsigned k = 0; k < n; ++k) {
                Rational acc(0);
                for (unsigned a = 0; a < n; ++a) {
                    acc += pinv(k, a) * old[a];
                }
                t[i][j][k] = acc;
            }
        }
    }
    return LieSuperAlgebra(std::move(basis), std::move(t));
}

AdaptedBasis adapt_basis(const LieSuperAlgebra &g, const std::vector<LieVector> &span)
{
    const unsigned n = g.dim();
    std::vector<LieVector> new_cols;
    std::vector<std::string> names;
    // Per parity: reduced span vectors, then missing standard vectors.
    std::vector<LieVector> complement_cols;
    std::vector<std::string> complement_names;
    unsigned h_count = 0;
    for (Parity par : {Parity::even, Parity::odd}) {
        RationalMatrix rows;
        for (const auto &v : span) {
            if (v.size() != n) {
                throw DimensionError("span vector has wrong length");
            }
            const auto pv = g.parity(v);
            if (!pv) {
                throw ParityError("span vectors must be homogeneous");
            }
            if (*pv == par && !is_zero_vector(v)) {
                rows.append_row(v);
            }
        }
        std::vector<bool> pivot(n, false);
        if (rows.rows() > 0) {
            const auto pivots = row_reduce(rows);
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                LieVector v(n);
                for (unsigned a = 0; a < n; ++a) {
                    v[a] = rows(r, a);
                }
                pivot[pivots[r]] = true;
                std::string nm = "h" + std::to_string(h_count + 1);
                // Keep the original name for standard basis vectors.
                unsigned nz = 0;
                for (unsigned a = 0; a < n; ++a) {
                    nz += sgn(v[a]) != 0;
                }
                if (nz == 1) {
                    nm = g.basis()[pivots[r]].name;
                }
                new_cols.push_back(std::move(v));
                names.push_back(nm);
                ++h_count;
            }
        }
        for (unsigned a = 0; a < n; ++a) {
            if (g.basis()[a].parity == par && !pivot[a]) {
                complement_cols.push_back(g.unit_vector(a));
                complement_names.push_back(g.basis()[a].name);
            }
        }
    }
    new_cols.insert(new_cols.end(), complement_cols.begin(), complement_cols.end());
    names.insert(names.end(), complement_names.begin(), complement_names.end());

    RationalMatrix change(n, n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned a = 0; a < n; ++a) {
            change(a, i) = new_cols[i][a];
        }
    }
    AdaptedBasis out{change_basis(g, change, names), change, {}};
    for (unsigned i = 0; i < h_count; ++i) {
        out.h.span.push_back(i);
    }
    check_subalgebra(out.algebra, out.h);
    return out;
}

LieSuperAlgebra abelian_algebra(const std::vector<LieGenerator> &basis)
{
    return LieSuperAlgebra::from_brackets(basis, {});
}

LieSuperAlgebra general_linear(unsigned p, unsigned q)
{
    const unsigned n = p + q;
    auto ip = [&](unsigned i) { return i < p ? Parity::even : Parity::odd; };
    std::vector<std::pair<unsigned, unsigned>> elems;
    for (Parity par : {Parity::even, Parity::odd}) {
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j < n; ++j) {
                if (ip(i) + ip(j) == par) {
                    elems.emplace_back(i, j);
                }
            }
        }
    }
    std::vector<LieGenerator> basis;
    std::map<std::pair<unsigned, unsigned>, unsigned> index;
    for (unsigned k = 0; k < elems.size(); ++k) {
        const auto [i, j] = elems[k];
        basis.push_back({"E" + std::to_string(i + 1) + std::to_string(j + 1), ip(i) + ip(j)});
        index[elems[k]] = k;
    }
    const unsigned d = static_cast<unsigned>(elems.size());
    LieSuperAlgebra::Table t(d, std::vector<LieVector>(d, LieVector(d)));
    for (unsigned a = 0; a < d; ++a) {
        for (unsigned b = 0; b < d; ++b) {
            const auto [i, j] = elems[a];
            const auto [k, l] = elems[b];
            // E_ij E_kl - (-1)^{|a||b|} E_kl E_ij
            if (j == k) {
                t[a][b][index.at({i, l})] += 1;
            }
            if (l == i) {
                t[a][b][index.at({k, j})] -= koszul_sign(basis[a].parity, basis[b].parity);
            }
        }
    }
    return LieSuperAlgebra(std::move(basis), std::move(t));
}

} // namespace superint
