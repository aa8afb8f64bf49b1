#include "tvcf/accel.hpp"

namespace tvcf {

std::vector<Complex> iterate_once(const TwoVariantCF& cf, const TailModel& model,
                                  const std::vector<Complex>& row_j, long j,
                                  const PrecisionContext& ctx) {
    if (row_j.size() < 2)
        throw RowExhausted("row " + std::to_string(j) + " has fewer than two entries");
    // exponent bookkeeping m/2 + j*theta carried as the exact integer
    // numerator over 2
    long e2 = model.m + 2 * j * model.theta;
    std::vector<Complex> next;
    next.reserve(row_j.size() - 1);
    for (size_t idx = 0; idx + 1 < row_j.size(); ++idx) {
        long n = static_cast<long>(idx) + 1;
        const Complex& u_n = row_j[idx];
        const Complex& u_n1 = row_j[idx + 1];
        Complex a1 = cf.a_shift().eval(n);
        Complex b1 = cf.b_shift().eval(n);
        Complex apn = cf.a_prime().eval(n);
        Complex bpn = cf.b_prime().eval(n);

        Complex inner = b1 + u_n1;
        if (inner.is_zero())
            throw ZeroDenominator("u+ inner denominator vanished", n, j);
        Complex outer = bpn + a1 / inner;
        if (outer.is_zero())
            throw ZeroDenominator("u+ outer denominator vanished", n, j);
        Complex uplus = apn / outer;

        Complex psi_den = a1 + bpn * b1 + bpn * u_n1;
        if (psi_den.is_zero())
            throw ZeroDenominator("psi denominator vanished", n, j);
        Complex psi = apn * a1 / (psi_den * psi_den);
        Complex phi = Complex(ctx.real(e2) / (2 * n)) + 1L;
        Complex comb_den = phi - psi;
        if (comb_den.is_zero())
            throw ZeroDenominator("phi - psi vanished", n, j);
        next.push_back((phi * uplus - psi * u_n) / comb_den);
    }
    return next;
}

AccelResult accelerate(const TwoVariantCF& cf, long n_rows, long iterations,
                       const PrecisionContext& ctx, const std::optional<Complex>& reference,
                       bool keep_rows) {
    if (n_rows < 1 || iterations < 0 || n_rows < iterations + 1)
        throw DomainError("need N >= J+1 initial approximants (got N=" +
                          std::to_string(n_rows) + ", J=" + std::to_string(iterations) + ")");
    if (reference && reference->is_zero())
        throw DomainError("reference value must be nonzero");
    bool full = keep_rows || reference.has_value();

    ShiftedCoeffs sc = shifted_coeffs(cf);
    SubclassTag tag = classify(sc, ctx);
    TailModel model = initial_tail(tag, sc, ctx);

    std::vector<Complex> row;
    row.reserve(static_cast<size_t>(n_rows));
    for (long n = 1; n <= n_rows; ++n) row.push_back(model.eval_initial(n, ctx));

    TailTable table{{}, model, n_rows, iterations, full};
    if (full) table.rows.push_back(row);
    for (long j = 0; j < iterations; ++j) {
        row = iterate_once(cf, model, row, j, ctx);
        if (full) table.rows.push_back(row);
    }
    if (!full) table.rows.push_back(row);

    Complex value = modified_approximant(cf, 1, row.front(), ctx);
    AccelResult result{std::move(value), std::move(table), cf, std::nullopt};
    if (reference) result.delta = delta_table(result, *reference, ctx);
    return result;
}

std::vector<std::vector<Real>> delta_table(const AccelResult& result, const Complex& reference,
                                           const PrecisionContext& ctx) {
    if (reference.is_zero()) throw DomainError("reference value must be nonzero");
    if (!result.table.full)
        throw DomainError("accelerate was run without diagnostics; no table retained");
    std::vector<std::vector<Real>> delta;
    delta.reserve(result.table.rows.size());
    for (const auto& row : result.table.rows) {
        std::vector<Real> line;
        line.reserve(row.size());
        for (size_t idx = 0; idx < row.size(); ++idx) {
            long n = static_cast<long>(idx) + 1;
            Complex s = modified_approximant(result.cf, 2 * n - 1, row[idx], ctx);
            line.push_back(acc(s, reference, ctx));
        }
        delta.push_back(std::move(line));
    }
    return delta;
}

}  // namespace tvcf
