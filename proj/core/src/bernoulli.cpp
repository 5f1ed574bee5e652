#include "mpair/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "mpair/errors.hpp"

namespace mpair {

const Rational& bernoulli(int n) {
    if (n < 0) throw Error("bernoulli index must be nonnegative");
    static std::mutex mutex;
    static std::vector<Rational>* cache = new std::vector<Rational>{Rational(1)};
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(cache->size()) <= n) {
        int m = static_cast<int>(cache->size());
        Rational acc = 0;
        for (int k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * (*cache)[k];
        cache->push_back(acc * make_rational(Int(-1), Int(m + 1)));
    }
    return (*cache)[static_cast<size_t>(n)];
}

}  // namespace mpair
