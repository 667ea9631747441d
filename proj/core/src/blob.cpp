#include "blobcell/blob.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "blobcell/domino.hpp"
#include "blobcell/error.hpp"
#include "blobcell/hecke.hpp"
#include "modp.hpp"

namespace blobcell {

namespace {

constexpr int kMaxDiagramN = 8;

// Strands between nodes; external nodes end lines, internal nodes have exactly two strands.
struct Segment {
  int a, b, blobs;
};

struct GlueResult {
  std::vector<Segment> lines;
  int plainLoops = 0;
  std::vector<int> blobLoops;
};

GlueResult glue(int nodes, const std::vector<Segment>& segs, const std::vector<bool>& external) {
  std::vector<std::vector<int>> at(static_cast<std::size_t>(nodes));
  for (std::size_t k = 0; k < segs.size(); ++k) {
    at[static_cast<std::size_t>(segs[k].a)].push_back(static_cast<int>(k));
    at[static_cast<std::size_t>(segs[k].b)].push_back(static_cast<int>(k));
  }
  std::vector<bool> used(segs.size(), false);
  auto nextSegment = [&](int node) {
    for (int k : at[static_cast<std::size_t>(node)])
      if (!used[static_cast<std::size_t>(k)]) return k;
    return -1;
  };
  // follows strands from start until an external node or back to start
  auto walk = [&](int start, int& blobs) {
    int cur = start;
    for (;;) {
      const int k = nextSegment(cur);
      if (k < 0) return cur;
      used[static_cast<std::size_t>(k)] = true;
      const auto& s = segs[static_cast<std::size_t>(k)];
      blobs += s.blobs;
      cur = s.a == cur ? s.b : s.a;
      if (external[static_cast<std::size_t>(cur)]) return cur;
    }
  };

  GlueResult out;
  for (int x = 0; x < nodes; ++x) {
    if (!external[static_cast<std::size_t>(x)] || nextSegment(x) < 0) continue;
    int blobs = 0;
    const int end = walk(x, blobs);
    out.lines.push_back({x, end, blobs});
  }
  for (std::size_t k = 0; k < segs.size(); ++k) {
    if (used[k]) continue;
    int blobs = 0;
    walk(segs[k].a, blobs);
    if (blobs) out.blobLoops.push_back(blobs);
    else ++out.plainLoops;
  }
  return out;
}

template <typename Scalar>
Scalar power(const Scalar& x, int e) {
  Scalar r(1);
  for (int k = 0; k < e; ++k) r = r * x;
  return r;
}

template <typename Scalar>
Scalar glueScalar(const GlueResult& g, const BlobScalars<Scalar>& s) {
  Scalar c = power(s.deltaPlain, g.plainLoops);
  for (int k : g.blobLoops) c = c * s.blobLoop * power(s.blobMerge, k - 1);
  for (const auto& line : g.lines)
    if (line.blobs > 1) c = c * power(s.blobMerge, line.blobs - 1);
  return c;
}

int circlePosition(int n, int p) { return p < n ? p : 3 * n - 1 - p; }

bool crosses(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

void checkDiagramSize(int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative diagram size");
  if (n > kMaxDiagramN) throw Error(Errc::BoundExceeded, "diagram enumeration needs n <= 8");
}

}  // namespace

BlobScalars<LaurentPoly> genericBlobScalars(int m) {
  return {-quantumInteger(2), quantumInteger(m - 1), -quantumInteger(m)};
}

BlobScalars<CycloNumber> specializedBlobScalars(const BlobParameters& params) {
  const auto g = genericBlobScalars(params.m);
  const auto spec = params.blob();
  return {specialize(g.deltaPlain, spec), specialize(g.blobLoop, spec), specialize(g.blobMerge, spec)};
}

// ---- diagrams

BlobDiagram::BlobDiagram(int n, std::vector<int> pairing, std::vector<bool> blobs)
    : n_(n), partner_(std::move(pairing)), blobbed_(std::move(blobs)) {
  const auto size = static_cast<std::size_t>(2 * n);
  if (n < 0 || partner_.size() != size || blobbed_.size() != size)
    throw Error(Errc::SizeMismatch, "diagram needs 2n endpoints");
  for (int p = 0; p < 2 * n; ++p) {
    const int q = partner_[static_cast<std::size_t>(p)];
    if (q < 0 || q >= 2 * n || q == p || partner_[static_cast<std::size_t>(q)] != p)
      throw Error(Errc::InvalidArgument, "diagram pairing is not a perfect matching");
    if (blobbed_[static_cast<std::size_t>(p)] != blobbed_[static_cast<std::size_t>(q)])
      throw Error(Errc::InvalidArgument, "blob flags differ on the two ends of a line");
  }
  for (int p = 0; p < 2 * n; ++p)
    for (int r = p + 1; r < 2 * n; ++r)
      if (partner(p) > p && partner(r) > r &&
          crosses(circlePosition(n, p), circlePosition(n, partner(p)), circlePosition(n, r), circlePosition(n, partner(r))))
        throw Error(Errc::InvalidArgument, "diagram is not planar");
  for (int p = 0; p < 2 * n; ++p)
    if (blobbed_[static_cast<std::size_t>(p)] && !isExposed(p))
      throw Error(Errc::ExposureViolation, "blob on a hidden line: " + toString());
}

BlobDiagram BlobDiagram::identity(int n) {
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  for (int p = 0; p < n; ++p) {
    partner[static_cast<std::size_t>(p)] = p + n;
    partner[static_cast<std::size_t>(p + n)] = p;
  }
  return BlobDiagram(n, std::move(partner), std::vector<bool>(static_cast<std::size_t>(2 * n), false));
}

BlobDiagram BlobDiagram::generator(int n, int i) {
  if (i < 0 || i >= n) throw Error(Errc::IndexOutOfRange, "generator U_" + std::to_string(i));
  BlobDiagram d = identity(n);
  if (i == 0) {
    d.blobbed_[0] = d.blobbed_[static_cast<std::size_t>(n)] = true;
    return d;
  }
  auto join = [&](int a, int b) {
    d.partner_[static_cast<std::size_t>(a)] = b;
    d.partner_[static_cast<std::size_t>(b)] = a;
  };
  join(i - 1, i);
  join(n + i - 1, n + i);
  return d;
}

int BlobDiagram::propagatingCount() const {
  int c = 0;
  for (int p = 0; p < n_; ++p)
    if (isPropagating(p)) ++c;
  return c;
}

bool BlobDiagram::isExposed(int p) const {
  const int q = partner(p);
  if (isPropagating(p)) {
    const int top = std::min(p, q);
    for (int t = 0; t < top; ++t)
      if (isPropagating(t)) return false;
    return true;
  }
  // arc on one side: compare in that side's coordinates
  const int base = p < n_ ? 0 : n_;
  const int i = std::min(p, q) - base, j = std::max(p, q) - base;
  for (int k = 0; k < i; ++k) {
    const int pk = base + k;
    if (isPropagating(pk)) return false;
    const int l = partner(pk) - base;
    if (l > j && l < n_ && partner(pk) >= base) return false;
  }
  return true;
}

std::string BlobDiagram::toString() const {
  std::string out = "{";
  for (int p = 0; p < 2 * n_; ++p) {
    const int q = partner(p);
    if (q < p) continue;
    if (out.size() > 1) out += ",";
    auto name = [&](int x) { return (x < n_ ? "t" : "b") + std::to_string(x < n_ ? x + 1 : x - n_ + 1); };
    out += name(p) + "-" + name(q) + (blobbed(p) ? "*" : "");
  }
  return out + "}";
}

ScaledDiagram<LaurentPoly> composeDiagrams(const BlobDiagram& a, const BlobDiagram& b,
                                           const BlobScalars<LaurentPoly>& scalars) {
  if (a.n() != b.n()) throw Error(Errc::SizeMismatch, "composing diagrams of different size");
  const int n = a.n();
  std::vector<Segment> segs;
  auto mapA = [n](int x) { return x < n ? x : x + n; };
  auto mapB = [n](int x) { return x < n ? x + 2 * n : x; };
  for (int p = 0; p < 2 * n; ++p) {
    if (a.partner(p) > p) segs.push_back({mapA(p), mapA(a.partner(p)), a.blobbed(p) ? 1 : 0});
    if (b.partner(p) > p) segs.push_back({mapB(p), mapB(b.partner(p)), b.blobbed(p) ? 1 : 0});
  }
  std::vector<bool> external(static_cast<std::size_t>(3 * n), false);
  std::fill(external.begin(), external.begin() + 2 * n, true);
  const GlueResult g = glue(3 * n, segs, external);

  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  std::vector<bool> blobbed(static_cast<std::size_t>(2 * n));
  for (const auto& line : g.lines) {
    partner[static_cast<std::size_t>(line.a)] = line.b;
    partner[static_cast<std::size_t>(line.b)] = line.a;
    blobbed[static_cast<std::size_t>(line.a)] = blobbed[static_cast<std::size_t>(line.b)] = line.blobs > 0;
  }
  return {glueScalar(g, scalars), BlobDiagram(n, std::move(partner), std::move(blobbed))};
}

std::vector<BlobDiagram> blobDiagramBasis(int n) {
  checkDiagramSize(n);
  std::vector<BlobDiagram> out;
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  auto point = [n](int c) { return c < n ? c : 3 * n - 1 - c; };

  std::function<void()> fill = [&]() {
    int lo = 0;
    while (lo < 2 * n && partner[static_cast<std::size_t>(point(lo))] >= 0) ++lo;
    if (lo == 2 * n) {
      const BlobDiagram plain(n, partner, std::vector<bool>(static_cast<std::size_t>(2 * n), false));
      std::vector<int> exposed;
      for (int p = 0; p < 2 * n; ++p)
        if (plain.partner(p) > p && plain.isExposed(p)) exposed.push_back(p);
      for (std::uint32_t mask = 0; mask < (1U << exposed.size()); ++mask) {
        std::vector<bool> blobbed(static_cast<std::size_t>(2 * n), false);
        for (std::size_t k = 0; k < exposed.size(); ++k)
          if (mask >> k & 1U) {
            blobbed[static_cast<std::size_t>(exposed[k])] = true;
            blobbed[static_cast<std::size_t>(plain.partner(exposed[k]))] = true;
          }
        out.emplace_back(n, partner, std::move(blobbed));
      }
      return;
    }
    // circle position lo pairs with an unused position so that the enclosed stretch is even and free
    int free = 0;
    for (int c = lo + 1; c < 2 * n; ++c) {
      if (partner[static_cast<std::size_t>(point(c))] >= 0) break;
      if (free % 2 == 0) {
        partner[static_cast<std::size_t>(point(lo))] = point(c);
        partner[static_cast<std::size_t>(point(c))] = point(lo);
        fill();
        partner[static_cast<std::size_t>(point(lo))] = partner[static_cast<std::size_t>(point(c))] = -1;
      }
      ++free;
    }
  };
  fill();
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t blobAlgebraDimension(int n) { return blobDiagramBasis(n).size(); }

DiagramVector multiply(const DiagramVector& x, const DiagramVector& y, const BlobScalars<LaurentPoly>& scalars) {
  DiagramVector out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      auto r = composeDiagrams(a, b, scalars);
      out[r.diagram] += ca * cb * r.scalar;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.isZero(); });
  return out;
}

BlobDiagram extendRight(const BlobDiagram& d, int extra) {
  const int n = d.n(), N = n + extra;
  auto lift = [&](int p) { return p < n ? p : p - n + N; };
  std::vector<int> partner(static_cast<std::size_t>(2 * N));
  std::vector<bool> blobbed(static_cast<std::size_t>(2 * N), false);
  for (int p = 0; p < 2 * n; ++p) {
    partner[static_cast<std::size_t>(lift(p))] = lift(d.partner(p));
    blobbed[static_cast<std::size_t>(lift(p))] = d.blobbed(p);
  }
  for (int p = n; p < N; ++p) {
    partner[static_cast<std::size_t>(p)] = p + N;
    partner[static_cast<std::size_t>(p + N)] = p;
  }
  return BlobDiagram(N, std::move(partner), std::move(blobbed));
}

// ---- half diagrams

BlobHalfDiagram::BlobHalfDiagram(int n, std::vector<int> pairing, std::vector<bool> blobs)
    : partner_(std::move(pairing)), blobbed_(std::move(blobs)) {
  const auto size = static_cast<std::size_t>(n);
  if (n < 0 || partner_.size() != size || blobbed_.size() != size)
    throw Error(Errc::SizeMismatch, "half diagram needs n points");
  for (int p = 0; p < n; ++p) {
    const int q = partner_[static_cast<std::size_t>(p)];
    if (q < 0) continue;
    if (q >= n || q == p || partner_[static_cast<std::size_t>(q)] != p)
      throw Error(Errc::InvalidArgument, "half diagram arcs are not a matching");
    if (blobbed_[static_cast<std::size_t>(p)] != blobbed_[static_cast<std::size_t>(q)])
      throw Error(Errc::InvalidArgument, "blob flags differ on the two ends of an arc");
  }
  for (int p = 0; p < n; ++p) {
    const int q = partner(p);
    if (q < p) continue;
    for (int r = p + 1; r < q; ++r) {
      if (isDefect(r)) throw Error(Errc::InvalidArgument, "arc encloses a defect");
      if (partner(r) < p || partner(r) > q) throw Error(Errc::InvalidArgument, "half diagram is not planar");
    }
  }
  for (int p = 0; p < n; ++p)
    if (blobbed(p) && !isExposed(p)) throw Error(Errc::ExposureViolation, "blob on a hidden line: " + toString());
}

int BlobHalfDiagram::defectCount() const {
  return static_cast<int>(std::count(partner_.begin(), partner_.end(), -1));
}

int BlobHalfDiagram::firstDefect() const {
  const auto it = std::find(partner_.begin(), partner_.end(), -1);
  return it == partner_.end() ? -1 : static_cast<int>(it - partner_.begin());
}

bool BlobHalfDiagram::isExposed(int p) const {
  if (isDefect(p)) return p == firstDefect();
  const int i = std::min(p, partner(p));
  for (int k = 0; k < i; ++k)
    if (isDefect(k) || partner(k) > i) return false;
  return true;
}

std::string BlobHalfDiagram::toString() const {
  std::string out;
  for (int p = 0; p < n(); ++p) {
    if (isDefect(p)) out += "|";
    else out += partner(p) > p ? "(" : ")";
    if (blobbed(p)) out += "*";
  }
  return out;
}

std::vector<BlobHalfDiagram> halfDiagrams(const BlobWeight& lambda) {
  const int n = lambda.n(), defects = std::abs(lambda.value());
  checkDiagramSize(n);
  std::vector<BlobHalfDiagram> out;
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  std::vector<int> open;

  std::function<void(int, int)> build = [&](int p, int used) {
    if (p == n) {
      if (!open.empty() || used != defects) return;
      const BlobHalfDiagram plain(n, partner, std::vector<bool>(static_cast<std::size_t>(n), false));
      std::vector<int> exposed;
      for (int x = 0; x < n; ++x)
        if (plain.partner(x) > x && plain.isExposed(x)) exposed.push_back(x);
      for (std::uint32_t mask = 0; mask < (1U << exposed.size()); ++mask) {
        std::vector<bool> blobbed(static_cast<std::size_t>(n), false);
        for (std::size_t k = 0; k < exposed.size(); ++k)
          if (mask >> k & 1U)
            blobbed[static_cast<std::size_t>(exposed[k])] = blobbed[static_cast<std::size_t>(plain.partner(exposed[k]))] = true;
        if (lambda.value() < 0) blobbed[static_cast<std::size_t>(plain.firstDefect())] = true;
        out.emplace_back(n, partner, std::move(blobbed));
      }
      return;
    }
    if (open.empty() && used < defects) build(p + 1, used + 1);
    open.push_back(p);
    build(p + 1, used);
    open.pop_back();
    if (!open.empty()) {
      const int q = open.back();
      open.pop_back();
      partner[static_cast<std::size_t>(p)] = q;
      partner[static_cast<std::size_t>(q)] = p;
      build(p + 1, used);
      partner[static_cast<std::size_t>(p)] = partner[static_cast<std::size_t>(q)] = -1;
      open.push_back(q);
    }
  };
  build(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// D on top of h, truncated to Delta_n(lambda).
std::optional<std::pair<LaurentPoly, BlobHalfDiagram>> actOnHalf(const BlobDiagram& d, const BlobHalfDiagram& h,
                                                                 int lambda, const BlobScalars<LaurentPoly>& s) {
  const int n = d.n();
  std::vector<Segment> segs;
  for (int p = 0; p < 2 * n; ++p)
    if (d.partner(p) > p) segs.push_back({p, d.partner(p), d.blobbed(p) ? 1 : 0});
  for (int p = 0; p < n; ++p) {
    const int b = h.blobbed(p) ? 1 : 0;
    if (h.isDefect(p)) segs.push_back({n + p, 2 * n + p, b});
    else if (h.partner(p) > p) segs.push_back({n + p, n + h.partner(p), b});
  }
  std::vector<bool> external(static_cast<std::size_t>(3 * n), true);
  std::fill(external.begin() + n, external.begin() + 2 * n, false);
  const GlueResult g = glue(3 * n, segs, external);

  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  std::vector<bool> blobbed(static_cast<std::size_t>(n), false);
  std::vector<std::pair<int, int>> defectBlobs;
  for (const auto& line : g.lines) {
    const bool topA = line.a < n, topB = line.b < n;
    if (!topA && !topB) return std::nullopt;  // two defects joined
    if (topA && topB) {
      partner[static_cast<std::size_t>(line.a)] = line.b;
      partner[static_cast<std::size_t>(line.b)] = line.a;
      blobbed[static_cast<std::size_t>(line.a)] = blobbed[static_cast<std::size_t>(line.b)] = line.blobs > 0;
    } else {
      const int top = topA ? line.a : line.b;
      blobbed[static_cast<std::size_t>(top)] = line.blobs > 0;
      defectBlobs.emplace_back(top, line.blobs);
    }
  }
  if (!defectBlobs.empty()) {
    const auto first = *std::min_element(defectBlobs.begin(), defectBlobs.end());
    if ((lambda < 0) != (first.second > 0)) return std::nullopt;
  }
  return std::make_pair(glueScalar(g, s), BlobHalfDiagram(n, std::move(partner), std::move(blobbed)));
}

}  // namespace

BlobModule<LaurentPoly> standardModule(const BlobWeight& lambda, int m) {
  const auto basis = halfDiagrams(lambda);
  const auto scalars = genericBlobScalars(m);
  const int n = lambda.n();
  std::map<BlobHalfDiagram, std::size_t> index;
  BlobModule<LaurentPoly> out;
  out.n = n;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    index.emplace(basis[k], k);
    out.labels.push_back(basis[k].toString());
  }
  for (int i = 0; i < n; ++i) {
    const BlobDiagram u = BlobDiagram::generator(n, i);
    Matrix<LaurentPoly> mat(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (auto r = actOnHalf(u, basis[j], lambda.value(), scalars)) mat(index.at(r->second), j) += r->first;
    out.generators.push_back(std::move(mat));
  }
  return out;
}

BlobModule<LaurentPoly> regularRepresentation(int n, int m) {
  const auto basis = blobDiagramBasis(n);
  const auto scalars = genericBlobScalars(m);
  std::map<BlobDiagram, std::size_t> index;
  BlobModule<LaurentPoly> out;
  out.n = n;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    index.emplace(basis[k], k);
    out.labels.push_back(basis[k].toString());
  }
  for (int i = 0; i < n; ++i) {
    const BlobDiagram u = BlobDiagram::generator(n, i);
    Matrix<LaurentPoly> mat(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto r = composeDiagrams(u, basis[j], scalars);
      mat(index.at(r.diagram), j) += r.scalar;
    }
    out.generators.push_back(std::move(mat));
  }
  return out;
}

BlobModule<CycloNumber> specialize(const BlobModule<LaurentPoly>& module, const Specialization& spec) {
  BlobModule<CycloNumber> out;
  out.n = module.n;
  out.labels = module.labels;
  for (const auto& g : module.generators)
    out.generators.push_back(g.map([&](const LaurentPoly& p) { return specialize(p, spec); }));
  return out;
}

// ---- relations

template <typename Scalar>
PresentationReport verifyPresentation(const std::vector<Matrix<Scalar>>& u, const BlobScalars<Scalar>& s) {
  const int n = static_cast<int>(u.size());
  PresentationReport report;
  report.n = n;
  auto deviation = [](const Matrix<Scalar>& lhs, const Matrix<Scalar>& rhs) {
    const Matrix<Scalar> d = lhs - rhs;
    std::size_t c = 0;
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t k = 0; k < d.cols(); ++k)
        if (!(d(r, k) == Scalar(0))) ++c;
    return c;
  };
  auto U = [&](int i) -> const Matrix<Scalar>& { return u[static_cast<std::size_t>(i)]; };
  RelationCheck blobQuad{"U0^2 = -[m] U0"}, quad{"Ui^2 = -[2] Ui"}, braidUp{"Ui Ui+1 Ui = Ui"},
      braidDown{"Ui+1 Ui Ui+1 = Ui+1"}, blobLoop{"U1 U0 U1 = [m-1] U1"}, commute{"Ui Uj = Uj Ui, |i-j| > 1"};
  if (n >= 1) blobQuad.deviation += deviation(U(0) * U(0), s.blobMerge * U(0));
  for (int i = 1; i < n; ++i) quad.deviation += deviation(U(i) * U(i), s.deltaPlain * U(i));
  for (int i = 1; i + 1 < n; ++i) {
    braidUp.deviation += deviation(U(i) * U(i + 1) * U(i), U(i));
    braidDown.deviation += deviation(U(i + 1) * U(i) * U(i + 1), U(i + 1));
  }
  if (n >= 2) blobLoop.deviation += deviation(U(1) * U(0) * U(1), s.blobLoop * U(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) commute.deviation += deviation(U(i) * U(j), U(j) * U(i));
  report.relations = {blobQuad, quad, braidUp, braidDown, blobLoop, commute};
  return report;
}

template PresentationReport verifyPresentation(const std::vector<Matrix<LaurentPoly>>&,
                                               const BlobScalars<LaurentPoly>&);
template PresentationReport verifyPresentation(const std::vector<Matrix<CycloNumber>>&,
                                               const BlobScalars<CycloNumber>&);

PresentationReport verifyPresentation(const BlobWeight& lambda, int m) {
  return verifyPresentation(standardModule(lambda, m).generators, genericBlobScalars(m));
}

PresentationReport verifyRegularPresentation(int n, int m) {
  return verifyPresentation(regularRepresentation(n, m).generators, genericBlobScalars(m));
}

template <typename Scalar>
std::map<std::vector<int>, Scalar> wordTraces(const std::vector<Matrix<Scalar>>& u, int maxLength) {
  std::map<std::vector<int>, Scalar> out;
  std::vector<int> word;
  std::function<void(const Matrix<Scalar>&)> extend = [&](const Matrix<Scalar>& prefix) {
    if (static_cast<int>(word.size()) == maxLength) return;
    for (std::size_t g = 0; g < u.size(); ++g) {
      word.push_back(static_cast<int>(g));
      const Matrix<Scalar> next = word.size() == 1 ? u[g] : prefix * u[g];
      out.emplace(word, next.trace());
      extend(next);
      word.pop_back();
    }
  };
  if (!u.empty()) extend(u.front());
  return out;
}

template std::map<std::vector<int>, LaurentPoly> wordTraces(const std::vector<Matrix<LaurentPoly>>&, int);
template std::map<std::vector<int>, CycloNumber> wordTraces(const std::vector<Matrix<CycloNumber>>&, int);

// ---- localization

namespace {

using modp::Fp;

Matrix<Fp> reduce(const Matrix<LaurentPoly>& m) {
  return m.map([](const LaurentPoly& p) { return Fp::raw(p.evalMod(modp::kPoint, modp::kPrime)); });
}

Fp reduce(const LaurentPoly& p) { return Fp::raw(p.evalMod(modp::kPoint, modp::kPrime)); }

std::size_t rank(const Matrix<Fp>& m) {
  modp::EchelonSpan span;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    modp::Vec col(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m(r, c).v;
    span.insert(std::move(col));
  }
  return span.dimension();
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * static_cast<std::size_t>(n - k + j) / static_cast<std::size_t>(j);
  return r;
}

}  // namespace

LocalizationReport localize(const BlobWeight& lambda, int m) {
  const int n = lambda.n();
  if (n < 2) throw Error(Errc::InvalidArgument, "localization needs n >= 2");
  const Fp two = reduce(quantumInteger(2));
  if (two == Fp(0)) throw Error(Errc::TwoNotInvertible, "[2] vanishes at the evaluation point");

  LocalizationReport report;
  report.n = n;
  report.lambda = lambda.value();
  const auto module = standardModule(lambda, m);
  std::vector<Matrix<Fp>> u;
  for (const auto& g : module.generators) u.push_back(reduce(g));
  const Matrix<Fp> e = (-two.inverse()) * u.back();
  report.dimension = rank(e);

  const bool survives = std::abs(lambda.value()) <= n - 2;
  report.expectedDimension = survives ? binomial(n - 2, (n - 2 - lambda.value()) / 2) : 0;

  std::map<std::vector<int>, Fp> expected;
  std::vector<Matrix<Fp>> lower;
  if (survives) {
    for (const auto& g : standardModule(BlobWeight(n - 2, lambda.value()), m).generators) lower.push_back(reduce(g));
    expected = wordTraces(lower, 3);
  }
  std::vector<Matrix<Fp>> restricted(u.begin(), u.begin() + (n - 2));
  const auto words = wordTraces(restricted, 3);
  report.tracesMatch = (e.trace() == Fp(static_cast<std::int64_t>(report.expectedDimension)));
  for (const auto& [word, unused] : words) {
    Matrix<Fp> w = Matrix<Fp>::identity(e.rows());
    for (int g : word) w = w * u[static_cast<std::size_t>(g)];
    const Fp lhs = (w * e).trace();
    const Fp rhs = survives ? expected.at(word) : Fp(0);
    if (!(lhs == rhs)) report.tracesMatch = false;
    ++report.tracesChecked;
  }
  return report;
}

IdempotentReport checkIdempotentTruncation(int n, int m) {
  if (n < 2) throw Error(Errc::InvalidArgument, "idempotent truncation needs n >= 2");
  const auto scalars = genericBlobScalars(m);
  const auto big = blobDiagramBasis(n);
  const auto small = blobDiagramBasis(n - 2);
  std::map<BlobDiagram, std::size_t> index;
  for (std::size_t k = 0; k < big.size(); ++k) index.emplace(big[k], k);
  const BlobDiagram u = BlobDiagram::generator(n, n - 1);

  IdempotentReport report;
  report.n = n;
  report.expectedDimension = small.size();
  auto toVec = [&](const DiagramVector& x) {
    modp::Vec v(big.size(), 0);
    for (const auto& [d, c] : x) v[index.at(d)] = reduce(c).v;
    return v;
  };
  const DiagramVector uVec{{u, LaurentPoly(1)}};
  modp::EchelonSpan corner, image;
  for (const auto& d : big) corner.insert(toVec(multiply(multiply(uVec, {{d, 1}}, scalars), uVec, scalars)));
  std::vector<DiagramVector> lifted;
  for (const auto& d : small) {
    lifted.push_back(multiply(uVec, {{extendRight(d), 1}}, scalars));
    image.insert(toVec(lifted.back()));
  }
  report.cornerRank = corner.dimension();
  report.imageRank = image.dimension();

  const auto smallScalars = genericBlobScalars(m);
  for (std::size_t a = 0; a < small.size(); ++a)
    for (std::size_t b = 0; b < small.size(); ++b) {
      const auto ab = composeDiagrams(small[a], small[b], smallScalars);
      DiagramVector rhs = multiply(uVec, {{extendRight(ab.diagram), ab.scalar * scalars.deltaPlain}}, scalars);
      if (multiply(lifted[a], lifted[b], scalars) != rhs) report.multiplicative = false;
      ++report.pairsChecked;
    }
  return report;
}

// ---- cell modules

CellComparisonReport compareCellToStandard(int n, const BlobParameters& params) {
  if (!params.satisfiesCondition()) throw Error(Errc::SpecializationInvalid, "q = -q^{2m} fails");
  const auto& basis = computeKLBasis(n);
  const auto& sys = *basis.system();
  const WbTable wb(n);
  const auto scalars = specializedBlobScalars(params);
  const auto identity = sys.identity();
  const auto s0 = sys.fromWord({0});

  CellComparisonReport report;
  report.n = n;
  for (const auto& cell : basis.leftCells()) {
    const SignedPermutation rep = sys.signedPermutation(cell.front());
    if (!wb.contains(rep)) continue;
    CellComparison c;
    c.representative = rep;
    c.lambda = blobWeightOf(twoQuotient(dominoShape(rep)));
    const CellModule cm = cellModule(basis, rep, params);
    const auto standard = specialize(standardModule(c.lambda, params.m), params.blob());
    c.cellDimension = cm.basis.size();
    c.standardDimension = standard.generators.empty() ? 1 : standard.generators.front().rows();
    c.relationsHold = verifyPresentation(cm.blobGenerators, scalars).ok();
    c.tracesMatch = c.cellDimension == c.standardDimension &&
                    wordTraces(cm.blobGenerators, 4) == wordTraces(standard.generators, 4);
    const bool special = std::find(cell.begin(), cell.end(), identity) != cell.end() ||
                         std::find(cell.begin(), cell.end(), s0) != cell.end();
    if (special) c.exact = cm.blobGenerators == standard.generators;
    report.cells.push_back(std::move(c));
  }
  return report;
}

}  // namespace blobcell
