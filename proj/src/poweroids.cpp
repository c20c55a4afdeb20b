#include "poweroid/poweroids.hpp"

#include <algorithm>
#include <stdexcept>

namespace poweroid {

namespace {

void check_sequence(const DeltaOperator& op, const std::vector<Polynomial>& polys) {
    (void)op;
    if (polys.empty() || !(polys[0] == Polynomial::constant(Rational(1))))
        throw std::logic_error("basic sequence must start with b_0 = 1");
    for (std::size_t n = 1; n < polys.size(); ++n) {
        if (polys[n].degree() != static_cast<int>(n))
            throw std::logic_error("basic sequence degree mismatch");
        if (!polys[n](Rational(0)).is_zero())
            throw std::logic_error("basic polynomial must vanish at 0");
    }
}

CoefficientTriangle triangle_from_rows(TriangleKind kind, std::string op_spec,
                                       std::vector<std::vector<Rational>> rows) {
    CoefficientTriangle t;
    t.kind = kind;
    t.op_spec = std::move(op_spec);
    t.order = static_cast<int>(rows.size()) - 1;
    t.rows = std::move(rows);
    for (std::size_t n = 0; n < t.rows.size(); ++n) {
        if (t.rows[n].size() != n + 1) throw std::logic_error("triangle row length mismatch");
        if (t.rows[n].back().is_zero()) throw std::logic_error("triangle diagonal entry is zero");
        if (n >= 1 && !t.rows[n].front().is_zero())
            throw std::logic_error("triangle column 0 must vanish for n >= 1");
    }
    if (!t.rows.empty() && !t.rows[0][0].is_one())
        throw std::logic_error("triangle (0,0) entry must be 1");
    return t;
}

std::vector<std::vector<Rational>> sequence_rows(const PoweroidSequence& seq) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(seq.length()) + 1);
    for (int n = 0; n <= seq.length(); ++n) {
        std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
        for (int nu = 0; nu <= n; ++nu) row[static_cast<std::size_t>(nu)] = seq.b(n).coeff(nu);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

const Rational& CoefficientTriangle::entry(int n, int nu) const {
    if (n < 0 || n > order || nu < 0 || nu > n)
        throw std::out_of_range("triangle entry outside the lower triangle");
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(nu)];
}

PoweroidSequence basic_sequence_transfer(const DeltaOperator& op, int N) {
    if (N < 0) throw std::domain_error("negative sequence length");
    if (op.order() < N) throw std::domain_error("insufficient truncation order");
    const PowerSeries eta = comp_inverse(op.phi());

    std::vector<std::vector<Rational>> coeff(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        coeff[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, Rational(0));

    PowerSeries eta_pow = PowerSeries::one(eta.order());
    for (int nu = 0; nu <= N; ++nu) {
        for (int n = nu; n <= N; ++n) {
            const Rational scale(factorial(n), factorial(nu));
            coeff[static_cast<std::size_t>(n)][static_cast<std::size_t>(nu)] =
                scale * eta_pow.coeff(n);
        }
        if (nu < N) eta_pow = mul(eta_pow, eta);
    }

    std::vector<Polynomial> polys;
    polys.reserve(static_cast<std::size_t>(N) + 1);
    for (auto& row : coeff) polys.emplace_back(std::move(row));
    check_sequence(op, polys);
    return PoweroidSequence{op, std::move(polys)};
}

PoweroidSequence basic_sequence_rodrigues(const DeltaOperator& op, int N) {
    if (N < 0) throw std::domain_error("negative sequence length");
    if (op.order() < N) throw std::domain_error("insufficient truncation order");
    std::vector<Polynomial> polys{Polynomial::constant(Rational(1))};
    if (N >= 1) {
        const PowerSeries recip = reciprocal(derivative(op.phi()));
        const Polynomial x = Polynomial::x();
        for (int n = 1; n <= N; ++n)
            polys.push_back(x * apply_operator(recip, polys.back()));
    }
    check_sequence(op, polys);
    return PoweroidSequence{op, std::move(polys)};
}

Polynomial gould_factorial(const Rational& alpha, const Rational& beta, int n) {
    if (n < 0) throw std::domain_error("negative factorial index");
    if (n == 0) return Polynomial::constant(Rational(1));
    Polynomial result = Polynomial::x();
    const Rational na = Rational(n) * alpha;
    for (int j = 1; j < n; ++j)
        result = result * Polynomial({-(na + Rational(j) * beta), Rational(1)});
    return result;
}

CoefficientTriangle triangle_first_kind(const DeltaOperator& op, int N) {
    const PoweroidSequence seq = basic_sequence_transfer(op, N);
    return triangle_from_rows(TriangleKind::FirstKind, op.spec_string(), sequence_rows(seq));
}

CoefficientTriangle triangle_second_kind(const DeltaOperator& op, int N) {
    if (N < 0) throw std::domain_error("negative triangle order");
    if (op.order() < N) throw std::domain_error("insufficient truncation order");
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        rows[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, Rational(0));

    PowerSeries phi_pow = PowerSeries::one(op.order());
    for (int nu = 0; nu <= N; ++nu) {
        for (int n = nu; n <= N; ++n) {
            // gbar(nu, n) = theta^nu 0^n / nu! = (n!/nu!) coeff_n(phi^nu)
            const Rational scale(factorial(n), factorial(nu));
            rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(nu)] =
                scale * phi_pow.coeff(n);
        }
        if (nu < N) phi_pow = mul(phi_pow, op.phi());
    }
    return triangle_from_rows(TriangleKind::SecondKind, op.spec_string(), std::move(rows));
}

Rational difference_of_nothing(const CoefficientTriangle& t, int nu, int n) {
    return Rational(factorial(nu)) * t.entry(n, nu);
}

InversionCheck triangle_invert_check(const CoefficientTriangle& g,
                                     const CoefficientTriangle& gbar) {
    if (g.kind != TriangleKind::FirstKind || gbar.kind != TriangleKind::SecondKind)
        throw std::invalid_argument("invert check needs a first-kind and a second-kind triangle");
    if (g.order != gbar.order) throw std::invalid_argument("triangle dimension mismatch");
    for (int n = 0; n <= g.order; ++n) {
        for (int m = 0; m <= n; ++m) {
            Rational acc(0);
            for (int k = m; k <= n; ++k) acc += g.entry(n, k) * gbar.entry(k, m);
            const Rational expected(n == m ? 1 : 0);
            if (acc != expected) return InversionCheck{false, n, m, acc};
        }
    }
    return InversionCheck{true, -1, -1, Rational(0)};
}

PoweroidSequence umbral_compose(const PoweroidSequence& seq1, const PoweroidSequence& seq2) {
    if (seq1.length() != seq2.length())
        throw std::invalid_argument("sequence length mismatch");
    const DeltaOperator op = op_compose(seq1.op, seq2.op);
    std::vector<Polynomial> polys;
    polys.reserve(static_cast<std::size_t>(seq2.length()) + 1);
    for (int n = 0; n <= seq2.length(); ++n) {
        Polynomial acc;
        for (int i = 0; i <= n; ++i) acc += seq2.b(n).coeff(i) * seq1.b(i);
        polys.push_back(std::move(acc));
    }
    check_sequence(op, polys);
    return PoweroidSequence{op, std::move(polys)};
}

CoefficientTriangle connection_constants(const DeltaOperator& op1, const DeltaOperator& op2,
                                         int N) {
    // theta3 = theta1 o theta2^{-1}: phi3 = phi1(eta2(D)).
    const DeltaOperator op3 = op_compose(conjugate(op2), op1);
    const PoweroidSequence seq = basic_sequence_transfer(op3, N);
    return triangle_from_rows(TriangleKind::FirstKind, op3.spec_string(), sequence_rows(seq));
}

CoefficientTriangle connection_constants_by_solve(const DeltaOperator& op1,
                                                  const DeltaOperator& op2, int N) {
    const CoefficientTriangle g1 = triangle_first_kind(op1, N);
    const CoefficientTriangle g2 = triangle_first_kind(op2, N);
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        auto& row = rows[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, Rational(0));
        // Back-substitute C[n][m] from C . G2 = G1.
        for (int m = n; m >= 0; --m) {
            Rational acc = g1.entry(n, m);
            for (int k = m + 1; k <= n; ++k) acc -= row[static_cast<std::size_t>(k)] * g2.entry(k, m);
            row[static_cast<std::size_t>(m)] = acc / g2.entry(m, m);
        }
    }
    return triangle_from_rows(TriangleKind::FirstKind,
                              op1.spec_string() + " in basis " + op2.spec_string(),
                              std::move(rows));
}

PoweroidSequence central_hansen(int N) {
    if (N < 1) throw std::domain_error("central recursion needs N >= 1");
    const DeltaOperator op = make_central(std::max(N, 2));
    std::vector<Polynomial> m_polys;
    m_polys.push_back(Polynomial::constant(Rational(1)));
    m_polys.push_back(Rational(2) * Polynomial::x());
    const Polynomial four_x_sq = Rational(4) * (Polynomial::x() * Polynomial::x());
    for (int m = 2; m <= N; ++m) {
        const Polynomial factor =
            four_x_sq - Polynomial::constant(Rational((m - 2) * (m - 2)));
        m_polys.push_back(factor * m_polys[static_cast<std::size_t>(m - 2)]);
    }
    std::vector<Polynomial> polys;
    polys.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        polys.push_back(pow_int(Rational(1, 2), n) * m_polys[static_cast<std::size_t>(n)]);
    check_sequence(op, polys);
    return PoweroidSequence{op, std::move(polys)};
}

PowerSeries eta_in_theta(const DeltaOperator& op, int N) {
    if (N < 0) throw std::domain_error("negative truncation order");
    if (op.order() < N) throw std::domain_error("insufficient truncation order");
    const PowerSeries eta = comp_inverse(op.phi());
    const PoweroidSequence seq = basic_sequence_transfer(op, N);
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    for (int m = 0; m <= N; ++m)
        c[static_cast<std::size_t>(m)] =
            apply_operator(eta, seq.b(m))(Rational(0)) / Rational(factorial(m));
    return PowerSeries(std::move(c));
}

// ---------------------------------------------------------------------------
// Serialization.

namespace {

std::string json_rational_array(const std::vector<Rational>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += '"';
        out += xs[i].str();
        out += '"';
    }
    out += ']';
    return out;
}

std::string json_nested_rows(const std::vector<std::vector<Rational>>& rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ',';
        out += json_rational_array(rows[i]);
    }
    out += ']';
    return out;
}

std::string csv_rows(const std::vector<std::vector<Rational>>& rows, std::size_t width) {
    std::string out;
    for (std::size_t n = 0; n < rows.size(); ++n) {
        if (n) out += '\n';
        for (std::size_t m = 0; m < width; ++m) {
            if (m) out += ',';
            if (m < rows[n].size()) out += rows[n][m].str();
        }
    }
    return out;
}

std::string aligned_rows(const std::vector<std::vector<Rational>>& rows) {
    std::size_t width = 1;
    for (const auto& row : rows)
        for (const auto& x : row) width = std::max(width, x.str().size());
    std::string out;
    for (std::size_t n = 0; n < rows.size(); ++n) {
        if (n) out += '\n';
        for (std::size_t m = 0; m < rows[n].size(); ++m) {
            if (m) out += ' ';
            const std::string s = rows[n][m].str();
            out += std::string(width - s.size(), ' ');
            out += s;
        }
    }
    return out;
}

std::string phi_header(const std::string& op_spec, int order) {
    const DeltaOperator op = catalog(op_spec, std::max(order, 2));
    return "phi: [" + literal_list(op.phi().coefficients()) + "]";
}

}  // namespace

std::string to_json(const CoefficientTriangle& t) {
    return "{\"operator\":\"" + t.op_spec + "\",\"kind\":\"" +
           (t.kind == TriangleKind::FirstKind ? "g" : "gbar") +
           "\",\"order\":" + std::to_string(t.order) + ",\"rows\":" + json_nested_rows(t.rows) +
           "}";
}

std::string to_csv(const CoefficientTriangle& t) {
    return csv_rows(t.rows, static_cast<std::size_t>(t.order) + 1);
}

std::string to_pretty(const CoefficientTriangle& t) {
    std::string out = "operator: " + t.op_spec + "\n";
    try {
        out += phi_header(t.op_spec, t.order) + "\n";
    } catch (const std::exception&) {
        // provenance string is not a parseable spec; skip the phi line
    }
    out += std::string("kind: ") + (t.kind == TriangleKind::FirstKind ? "g" : "gbar") + "\n";
    out += "order: " + std::to_string(t.order) + "\n";
    out += aligned_rows(t.rows);
    return out;
}

std::string to_json(const PoweroidSequence& s) {
    std::vector<std::vector<Rational>> rows = sequence_rows(s);
    return "{\"operator\":\"" + s.op.spec_string() + "\",\"order\":" +
           std::to_string(s.length()) + ",\"polynomials\":" + json_nested_rows(rows) + "}";
}

std::string to_csv(const PoweroidSequence& s) {
    return csv_rows(sequence_rows(s), static_cast<std::size_t>(s.length()) + 1);
}

std::string to_pretty(const PoweroidSequence& s) {
    std::string out = "operator: " + s.op.spec_string() + "\n";
    out += "phi: [" + literal_list(s.op.phi().coefficients()) + "]\n";
    out += "order: " + std::to_string(s.length());
    for (int n = 0; n <= s.length(); ++n)
        out += "\nb_" + std::to_string(n) + "(x) = " + s.b(n).str();
    return out;
}

}  // namespace poweroid
