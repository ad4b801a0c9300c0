#include "stirling.hpp"

#include <mutex>
#include <vector>

#include "errors.hpp"

namespace szeta {

namespace {

struct StirlingCache {
  std::mutex mu;
  std::vector<std::vector<BigInt>> rows;  // rows[n][m], m <= n

  StirlingCache() { rows.push_back({BigInt(1)}); }

  BigInt get(long n, long m) {
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(rows.size()) <= n) {
      long nn = static_cast<long>(rows.size()) - 1;  // extend from row nn to nn+1
      const auto& prev = rows.back();
      std::vector<BigInt> next(nn + 2);
      for (long mm = 0; mm <= nn + 1; ++mm) {
        BigInt v = (mm >= 1 && mm - 1 <= nn) ? prev[mm - 1] : BigInt(0);
        if (mm <= nn) v -= nn * prev[mm];
        next[mm] = v;
      }
      rows.push_back(std::move(next));
    }
    return rows[n][m];
  }
};

}  // namespace

BigInt stirling_first(long n, long m) {
  if (n < 0 || m < 0) throw Error(ErrorCode::Usage, "stirling_first requires n, m >= 0");
  if (m > n) return BigInt(0);
  if (m == 0) return n == 0 ? BigInt(1) : BigInt(0);
  static StirlingCache cache;
  return cache.get(n, m);
}

}  // namespace szeta
