#include "qkz/cheb.hpp"
#include <mutex>
#include <stdexcept>
#include <vector>

namespace qkz {

namespace {
std::mutex cheb_mutex;
// table[i] = U_{i-1}
std::vector<TauPoly> cheb_table = {TauPoly(), TauPoly(1)};
} // namespace

const TauPoly& cheb_u(int k) {
    if (k < -1) throw std::domain_error("cheb_u: index below -1");
    std::lock_guard<std::mutex> lock(cheb_mutex);
    const TauPoly minus_tau = TauPoly::monomial(-1, 1);
    while (static_cast<int>(cheb_table.size()) < k + 2) {
        size_t m = cheb_table.size();
        cheb_table.push_back(minus_tau * cheb_table[m - 1] - cheb_table[m - 2]);
    }
    return cheb_table[static_cast<size_t>(k + 1)];
}

TauPoly cheb_u_ext(int k) {
    if (k >= -1) return cheb_u(k);
    return -cheb_u(-k - 2);
}

} // namespace qkz
