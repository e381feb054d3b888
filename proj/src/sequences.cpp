#include "pellfrieze/sequences.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace pellfrieze::sequences {

namespace {

void require_nonnegative(int n, const char* who) {
    if (n < 0) throw std::invalid_argument(std::string(who) + ": index must be >= 0");
}

struct StackPair {
    QuadInt s;
    QuadInt d;
};

// Shared memo tables behind one lock; the recurrences are the definition,
// no closed forms.
std::mutex mutex;
std::vector<StackPair> stack_memo;
std::vector<ConvergentPair> conv_memo;
std::vector<BigInt> pell_memo;

const QuadInt kRoot2 = QuadInt::sqrt2();

void grow_stack(int n) {
    if (stack_memo.empty()) stack_memo.push_back({QuadInt(0), QuadInt(1)});
    while (static_cast<int>(stack_memo.size()) <= n) {
        const StackPair& prev = stack_memo.back();
        stack_memo.push_back({kRoot2 * prev.s + prev.d, kRoot2 * prev.d + prev.s});
    }
}

}  // namespace

QuadInt s(int n) {
    require_nonnegative(n, "sequences::s");
    std::lock_guard<std::mutex> lock(mutex);
    grow_stack(n);
    return stack_memo[n].s;
}

QuadInt d(int n) {
    require_nonnegative(n, "sequences::d");
    std::lock_guard<std::mutex> lock(mutex);
    grow_stack(n);
    return stack_memo[n].d;
}

QuadInt ell(int n) { return unit_power(n); }

ConvergentPair convergent(int n) {
    require_nonnegative(n, "sequences::convergent");
    std::lock_guard<std::mutex> lock(mutex);
    if (conv_memo.empty()) conv_memo.push_back({1, 0});
    while (static_cast<int>(conv_memo.size()) <= n) {
        const ConvergentPair& prev = conv_memo.back();
        conv_memo.push_back({prev.a + 2 * prev.b, prev.a + prev.b});
    }
    return conv_memo[n];
}

BigInt pell(int k) {
    require_nonnegative(k, "sequences::pell");
    std::lock_guard<std::mutex> lock(mutex);
    if (pell_memo.empty()) {
        pell_memo.push_back(0);
        pell_memo.push_back(1);
    }
    while (static_cast<int>(pell_memo.size()) <= k) {
        const size_t m = pell_memo.size();
        pell_memo.push_back(2 * pell_memo[m - 1] + pell_memo[m - 2]);
    }
    return pell_memo[k];
}

}  // namespace pellfrieze::sequences
