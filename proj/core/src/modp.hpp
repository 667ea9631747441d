#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace blobcell::modp {

inline constexpr std::uint64_t kPrime = 1000000007ULL;
// generic evaluation point for rank computations
inline constexpr std::uint64_t kPoint = 982451653ULL % kPrime;

using Vec = std::vector<std::uint64_t>;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) { return (a + b) % kPrime; }
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return (a + kPrime - b) % kPrime; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return a * b % kPrime; }

inline std::uint64_t pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (base %= kPrime; e; e >>= 1, base = mul(base, base))
    if (e & 1) r = mul(r, base);
  return r;
}

inline std::uint64_t inv(std::uint64_t a) { return pow(a, kPrime - 2); }

/// Residue class usable as a Matrix scalar.
struct Fp {
  std::uint64_t v = 0;
  Fp() = default;
  Fp(std::int64_t x) : v(static_cast<std::uint64_t>(x % static_cast<std::int64_t>(kPrime) + static_cast<std::int64_t>(kPrime)) % kPrime) {}  // NOLINT
  static Fp raw(std::uint64_t x) {
    Fp f;
    f.v = x % kPrime;
    return f;
  }
  Fp& operator+=(Fp o) { v = add(v, o.v); return *this; }
  Fp& operator-=(Fp o) { v = sub(v, o.v); return *this; }
  friend Fp operator+(Fp a, Fp b) { return a += b; }
  friend Fp operator-(Fp a, Fp b) { return a -= b; }
  friend Fp operator*(Fp a, Fp b) { return raw(mul(a.v, b.v)); }
  Fp operator-() const { return raw(sub(0, v)); }
  Fp inverse() const { return raw(inv(v)); }
  friend bool operator==(Fp, Fp) = default;
};

/// Row echelon basis over F_p keyed by pivot column.
class EchelonSpan {
 public:
  bool insert(Vec v) {
    reduce(v);
    auto pivot = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
    if (pivot == v.end()) return false;
    const auto p = static_cast<std::size_t>(pivot - v.begin());
    const std::uint64_t f = inv(v[p]);
    for (auto& x : v) x = mul(x, f);
    rows_.emplace(p, std::move(v));
    return true;
  }
  bool contains(Vec v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
  }
  std::size_t dimension() const { return rows_.size(); }

 private:
  void reduce(Vec& v) const {
    for (const auto& [p, row] : rows_) {
      if (!v[p]) continue;
      const std::uint64_t f = v[p];
      for (std::size_t i = p; i < v.size(); ++i)
        if (row[i]) v[i] = sub(v[i], mul(f, row[i]));
    }
  }
  std::map<std::size_t, Vec> rows_;
};

}  // namespace blobcell::modp
