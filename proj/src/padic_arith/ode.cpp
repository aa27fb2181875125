#include "limifrob/padic/ode.hpp"

#include "limifrob/errors.hpp"

namespace limifrob {

PadicSeriesMatrix series_ode_solve(const PadicSeriesMatrix& N_loc, int M, int N_work) {
    const std::size_t r = N_loc.rows();
    if (N_loc.cols() != r) throw NonSquare("series_ode_solve: connection not square");
    if (N_loc.order() < M - 1) throw DimensionMismatch("series_ode_solve: connection truncated below M-1");
    long p = 0;
    for (std::size_t i = 0; i < r && p == 0; ++i)
        for (std::size_t j = 0; j < r && p == 0; ++j)
            if (N_loc(i, j).order() > 0) p = N_loc(i, j)[0].prime();
    if (p == 0) throw std::invalid_argument("series_ode_solve: prime unknown");

    PadicSeriesMatrix C(r, r, p, M);
    for (std::size_t i = 0; i < r; ++i) C(i, i)[0] = PadicScalar::exact(p, 1);

    int loss = 0;  // ord_p((i+1)!) so far
    for (int i = 0; i + 1 < M; ++i) {
        loss += ord_p(BigInt(i + 1), p);
        if (N_work - loss < 1)
            throw PrecisionExhausted("series_ode_solve: coefficient " + std::to_string(i + 1) +
                                     " has no digits left at working precision " + std::to_string(N_work));
        const PadicScalar step = PadicScalar::exact(p, i + 1);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) {
                PadicScalar s(0);
                for (int j = 0; j <= i; ++j)
                    for (std::size_t k = 0; k < r; ++k) s += N_loc(a, k)[j].reduce(N_work) * C(k, b)[i - j];
                C(a, b)[i + 1] = -(s / step);
            }
    }
    return C;
}

}  // namespace limifrob
