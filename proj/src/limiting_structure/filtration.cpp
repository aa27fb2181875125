#include "limifrob/errors.hpp"
#include "limifrob/ls/limiting.hpp"

namespace limifrob {

namespace {

QMatrix matrix_power(const QMatrix& A, int k) {
    QMatrix out = QMatrix::identity(A.rows());
    for (int i = 0; i < k; ++i) out = out * A;
    return out;
}

}  // namespace

const QMatrix& MonodromyFiltration::W(int k) const {
    if (k < -1) return spaces.front();
    if (k > 2 * n) return spaces.back();
    return spaces[k + 1];
}

std::vector<int> MonodromyFiltration::dims() const {
    std::vector<int> d;
    for (std::size_t i = 0; i < spaces.size(); ++i) d.push_back(static_cast<int>(spaces[i].cols()));
    return d;
}

MonodromyFiltration monodromy_filtration(const QMatrix& N0, int n) {
    if (!N0.is_square()) throw NonSquare("monodromy_filtration: N0 not square");
    const std::size_t r = N0.rows();
    std::vector<QMatrix> powers;  // N0^0 .. N0^(n+1)
    for (int k = 0; k <= n + 1; ++k) powers.push_back(matrix_power(N0, k));
    if (!powers.back().is_zero())
        throw NotNilpotent("monodromy_filtration: N0^" + std::to_string(n + 1) + " is not zero");

    const QMatrix zero(r, 0);
    auto kernel = [&](int m) -> QMatrix {
        if (m <= 0) return zero;
        if (m > n + 1) m = n + 1;
        return nullspace(powers[m]);
    };
    std::vector<QMatrix> images;
    for (int j = 0; j <= n + 1; ++j) images.push_back(column_basis(powers[j]));

    MonodromyFiltration f;
    f.n = n;
    for (int k = -1; k <= 2 * n; ++k) {
        QMatrix Wk = zero;
        for (int j = 0; j <= n; ++j) {
            int i = k - n + j;
            if (i + 1 <= 0 || images[j].cols() == 0) continue;
            Wk = subspace_sum(Wk, subspace_intersection(kernel(i + 1), images[j]));
        }
        f.spaces.push_back(Wk);
    }
    return f;
}

}  // namespace limifrob
