#include "whopf/linmap.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace whopf {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::ShapeMismatch, what);
}

void require_space(const Space& a, const Space& b, const char* op) {
  if (!(a == b)) throw Error(ErrorCode::ShapeMismatch, std::string(op) + ": " + a.name() + " vs " + b.name());
}

void require_field(FieldSpec a, FieldSpec b) {
  if (!(a == b)) throw Error(ErrorCode::FieldMismatch, a.name() + " vs " + b.name());
}

}  // namespace

// ---------------------------------------------------------------- Space

Space Space::atom(std::string name, std::vector<std::string> basis) {
  Space s;
  s.factors_.push_back(Factor{std::move(name), std::move(basis)});
  return s;
}

std::size_t Space::dim() const {
  std::size_t d = 1;
  for (const auto& f : factors_) d *= f.basis.size();
  return d;
}

std::string Space::name() const {
  if (factors_.empty()) return "K";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "⊗";
    out += factors_[i].name;
  }
  return out;
}

std::string Space::basis_label(std::size_t i) const {
  if (factors_.empty()) return "1";
  std::vector<std::string> parts(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    std::size_t n = factors_[k].basis.size();
    parts[k] = factors_[k].basis[i % n];
    i /= n;
  }
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += "|";
    out += parts[k];
  }
  return out;
}

std::vector<std::string> Space::basis_labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_label(i));
  return out;
}

std::optional<std::size_t> Space::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (basis_label(i) == label) return i;
  return std::nullopt;
}

Space tensor(const Space& a, const Space& b) {
  Space s = a;
  s.factors_.insert(s.factors_.end(), b.factors_.begin(), b.factors_.end());
  return s;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t r, std::size_t c, FieldSpec f)
    : rows(r), cols(c), field(f), data(r * c, Scalar::zero(f)) {}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m(sel, c), m(row, c));
    Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols; ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols; ++c)
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// ---------------------------------------------------------------- LinMap

LinMap::LinMap(Space dom, Space cod, FieldSpec f)
    : dom_(std::move(dom)), cod_(std::move(cod)), field_(f), rows_(cod_.dim()), cols_(dom_.dim()) {}

LinMap LinMap::identity(const Space& s, FieldSpec f) {
  LinMap id(s, s, f);
  for (std::size_t i = 0; i < s.dim(); ++i) id.cols_[i].emplace_back(static_cast<std::uint32_t>(i), Scalar::one(f));
  return id;
}

LinMap LinMap::scalar(const Scalar& s) {
  LinMap out(Space::unit(), Space::unit(), s.field());
  out.put(0, 0, s);
  return out;
}

Matrix LinMap::matrix() const {
  Matrix m(rows_, cols(), field_);
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& [r, v] : cols_[j]) m(r, j) = v;
  return m;
}

std::size_t LinMap::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

Scalar LinMap::at(std::size_t r, std::size_t c) const {
  const Column& col = cols_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t x) { return e.first < x; });
  if (it != col.end() && it->first == r) return it->second;
  return Scalar::zero(field_);
}

void LinMap::put(std::size_t r, std::size_t c, const Scalar& v) {
  require(r < rows_ && c < cols(), "put: index out of range");
  Column& col = cols_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t x) { return e.first < x; });
  const bool found = it != col.end() && it->first == r;
  if (v.is_zero()) {
    if (found) col.erase(it);
  } else if (found) {
    it->second = v;
  } else {
    col.insert(it, Entry(static_cast<std::uint32_t>(r), v));
  }
}

LinMap LinMap::retyped(const Space& dom, const Space& cod) const {
  require(dom.dim() == dom_.dim() && cod.dim() == cod_.dim(), "retyped: dimension change");
  LinMap out = *this;
  out.dom_ = dom;
  out.cod_ = cod;
  return out;
}

std::vector<Scalar> LinMap::column(std::size_t j) const {
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (const auto& [r, v] : cols_[j]) out[r] = v;
  return out;
}

bool LinMap::is_zero() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

std::size_t LinMap::rank() const {
  Matrix m = matrix();
  return rref(m).size();
}

LinMap operator*(const LinMap& g, const LinMap& f) {
  require_space(g.dom_, f.cod_, "compose");
  require_field(g.field_, f.field_);
  LinMap out(f.dom_, g.cod_, f.field_);
  const std::size_t n = g.rows();
  std::vector<std::uint32_t> touched;
  std::vector<char> mark(n, 0);
  if (f.field_.is_finite()) {
    const std::uint64_t p = f.field_.p;
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t j = 0; j < f.cols(); ++j) {
      touched.clear();
      for (const auto& [l, x] : f.cols_[j]) {
        const std::uint64_t xv = x.residue();
        for (const auto& [i, y] : g.cols_[l]) {
          if (!mark[i]) mark[i] = 1, touched.push_back(i);
          acc[i] = (acc[i] + xv * y.residue()) % p;
        }
      }
      std::sort(touched.begin(), touched.end());
      LinMap::Column& col = out.cols_[j];
      for (auto i : touched) {
        if (acc[i]) col.emplace_back(i, Scalar(f.field_, static_cast<long>(acc[i])));
        acc[i] = 0;
        mark[i] = 0;
      }
    }
    return out;
  }
  std::vector<Scalar> acc(n, Scalar::zero(f.field_));
  for (std::size_t j = 0; j < f.cols(); ++j) {
    touched.clear();
    for (const auto& [l, x] : f.cols_[j])
      for (const auto& [i, y] : g.cols_[l]) {
        if (!mark[i]) mark[i] = 1, touched.push_back(i);
        acc[i] += x * y;
      }
    std::sort(touched.begin(), touched.end());
    LinMap::Column& col = out.cols_[j];
    for (auto i : touched) {
      if (!acc[i].is_zero()) col.emplace_back(i, acc[i]);
      acc[i] = Scalar::zero(f.field_);
      mark[i] = 0;
    }
  }
  return out;
}

LinMap LinMap::combine(const LinMap& a, const LinMap& b, bool subtract) {
  require_space(a.dom_, b.dom_, subtract ? "subtract" : "add");
  require_space(a.cod_, b.cod_, subtract ? "subtract" : "add");
  require_field(a.field_, b.field_);
  LinMap out(a.dom_, a.cod_, a.field_);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const Column &x = a.cols_[j], &y = b.cols_[j];
    Column& o = out.cols_[j];
    std::size_t p = 0, q = 0;
    while (p < x.size() || q < y.size()) {
      if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
        o.push_back(x[p++]);
      } else if (p == x.size() || y[q].first < x[p].first) {
        o.emplace_back(y[q].first, subtract ? -y[q].second : y[q].second);
        ++q;
      } else {
        Scalar v = subtract ? x[p].second - y[q].second : x[p].second + y[q].second;
        if (!v.is_zero()) o.emplace_back(x[p].first, v);
        ++p, ++q;
      }
    }
  }
  return out;
}

LinMap operator+(const LinMap& a, const LinMap& b) { return LinMap::combine(a, b, false); }
LinMap operator-(const LinMap& a, const LinMap& b) { return LinMap::combine(a, b, true); }

LinMap operator*(const Scalar& s, const LinMap& a) {
  LinMap out(a.dom_, a.cod_, a.field_);
  if (s.is_zero()) return out;
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (const auto& [r, v] : a.cols_[j]) out.cols_[j].emplace_back(r, s * v);
  return out;
}

bool operator==(const LinMap& a, const LinMap& b) {
  return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.field_ == b.field_ && a.cols_ == b.cols_;
}

std::optional<std::size_t> first_difference(const LinMap& a, const LinMap& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "first_difference: shapes differ");
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a.cols_[j] != b.cols_[j]) return j;
  return std::nullopt;
}

std::string LinMap::to_string() const {
  std::ostringstream os;
  os << dom_.name() << " -> " << cod_.name() << "\n";
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) os << (j ? " " : "") << at(i, j).to_string();
    os << "\n";
  }
  return os.str();
}

LinMap tensor(const LinMap& f, const LinMap& g) {
  require_field(f.field(), g.field());
  LinMap out(tensor(f.dom(), g.dom()), tensor(f.cod(), g.cod()), f.field());
  const std::size_t gr = g.rows(), gc = g.cols();
  for (std::size_t j1 = 0; j1 < f.cols(); ++j1)
    for (std::size_t j2 = 0; j2 < gc; ++j2) {
      LinMap::Column& col = out.cols_[j1 * gc + j2];
      col.reserve(f.cols_[j1].size() * g.cols_[j2].size());
      for (const auto& [i1, x] : f.cols_[j1])
        for (const auto& [i2, y] : g.cols_[j2]) col.emplace_back(static_cast<std::uint32_t>(i1 * gr + i2), x * y);
    }
  return out;
}

LinMap through_tensor(const LinMap& g, const LinMap& a, const LinMap& b, const LinMap& f) {
  require_field(a.field_, b.field_);
  require_field(a.field_, f.field_);
  require_space(tensor(a.dom_, b.dom_), f.cod_, "compose");
  LinMap mid(f.dom_, tensor(a.cod_, b.cod_), f.field_);
  const std::size_t br = b.rows(), bc = b.cols();
  std::vector<std::uint32_t> touched;
  std::vector<char> mark(a.rows() * br, 0);
  if (f.field_.is_finite()) {
    const std::uint64_t p = f.field_.p;
    std::vector<std::uint64_t> acc(mark.size(), 0);
    for (std::size_t j = 0; j < f.cols(); ++j) {
      for (const auto& [k, c] : f.cols_[j]) {
        const std::uint64_t cv = c.residue();
        for (const auto& [ia, x] : a.cols_[k / bc]) {
          const std::uint64_t cx = cv * x.residue() % p;
          for (const auto& [ib, y] : b.cols_[k % bc]) {
            const std::uint32_t i = static_cast<std::uint32_t>(ia * br + ib);
            if (!mark[i]) mark[i] = 1, touched.push_back(i);
            acc[i] = (acc[i] + cx * y.residue()) % p;
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      for (auto i : touched) {
        if (acc[i]) mid.cols_[j].emplace_back(i, Scalar(f.field_, static_cast<long>(acc[i])));
        acc[i] = 0;
        mark[i] = 0;
      }
      touched.clear();
    }
  } else {
    std::vector<Scalar> acc(mark.size(), Scalar::zero(f.field_));
    for (std::size_t j = 0; j < f.cols(); ++j) {
      for (const auto& [k, c] : f.cols_[j])
        for (const auto& [ia, x] : a.cols_[k / bc]) {
          const Scalar cx = c * x;
          for (const auto& [ib, y] : b.cols_[k % bc]) {
            const std::uint32_t i = static_cast<std::uint32_t>(ia * br + ib);
            if (!mark[i]) mark[i] = 1, touched.push_back(i);
            acc[i] += cx * y;
          }
        }
      std::sort(touched.begin(), touched.end());
      for (auto i : touched) {
        if (!acc[i].is_zero()) mid.cols_[j].emplace_back(i, acc[i]);
        acc[i] = Scalar::zero(f.field_);
        mark[i] = 0;
      }
      touched.clear();
    }
  }
  return g * mid;
}

LinMap symmetry(const Space& v, const Space& w, FieldSpec f) {
  LinMap c(tensor(v, w), tensor(w, v), f);
  const std::size_t dv = v.dim(), dw = w.dim();
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < dw; ++j) c.set(j * dv + i, i * dw + j, 1);
  return c;
}

LinMap from_images(const Space& dom, const Space& cod, FieldSpec f,
                   const std::function<void(std::size_t, LinMap&)>& fill) {
  LinMap out(dom, cod, f);
  for (std::size_t j = 0; j < dom.dim(); ++j) fill(j, out);
  return out;
}

// ---------------------------------------------------------------- subspaces

namespace {

std::vector<std::string> numbered(const std::string& name, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(name + "_" + std::to_string(i));
  return out;
}

}  // namespace

Subspace kernel(const LinMap& f, const std::string& name) {
  Matrix m = f.matrix();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Space s = Space::atom(name, numbered(name, free.size()));
  LinMap inc(s, f.dom(), f.field());
  for (std::size_t k = 0; k < free.size(); ++k) {
    inc.put(free[k], k, Scalar::one(f.field()));
    for (std::size_t r = 0; r < pivots.size(); ++r) inc.put(pivots[r], k, -m(r, free[k]));
  }
  return {s, inc};
}

Subspace equalizer(const LinMap& f, const LinMap& g, const std::string& name) { return kernel(f - g, name); }

Subspace image(const LinMap& f, const std::string& name) {
  Matrix m = f.matrix();
  auto pivots = rref(m);
  Space s = Space::atom(name, numbered(name, pivots.size()));
  LinMap inc(s, f.cod(), f.field());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (const auto& [r, v] : f.col(pivots[k])) inc.put(r, k, v);
  return {s, inc};
}

Splitting split_idempotent(const LinMap& q, const std::string& name) {
  if (!(q.dom() == q.cod()) || !(q * q == q))
    throw Error(ErrorCode::NotIdempotent, "map on " + q.dom().name() + " is not idempotent");
  Subspace im = image(q, name);
  LinMap proj = factor_through(q, im.inclusion);
  return {im.space, im.inclusion, proj};
}

namespace {

// Solves a X = b column-wise; returns nullopt when inconsistent.
std::optional<AffineFamily> solve_matrix(const LinMap& a, const LinMap& b, const Space& xdom) {
  const FieldSpec f = a.field();
  const std::size_t n = a.cols(), k = b.cols();
  Matrix aug(a.rows(), n + k, f);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [i, v] : a.col(j)) aug(i, j) = v;
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& [i, v] : b.col(j)) aug(i, n + j) = v;
  auto pivots = rref(aug);
  for (auto p : pivots)
    if (p >= n) return std::nullopt;
  AffineFamily fam{LinMap(xdom, a.dom(), f), {}};
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < k; ++j) fam.particular.put(pivots[r], j, aug(r, n + j));
  Subspace ker = kernel(a, "ker");
  for (std::size_t v = 0; v < ker.space.dim(); ++v)
    for (std::size_t j = 0; j < k; ++j) {
      LinMap d(xdom, a.dom(), f);
      for (const auto& [i, x] : ker.inclusion.col(v)) d.put(i, j, x);
      fam.directions.push_back(std::move(d));
    }
  return fam;
}

}  // namespace

std::optional<AffineFamily> solve_affine(const LinMap& l, const LinMap& m) {
  if (!(l.cod() == m.cod())) throw Error(ErrorCode::ShapeMismatch, "solve_affine: codomains differ");
  return solve_matrix(l, m, m.dom());
}

LinMap factor_through(const LinMap& m, const LinMap& mono) {
  if (!(m.cod() == mono.cod())) throw Error(ErrorCode::ShapeMismatch, "factor_through: codomains differ");
  if (mono.rank() != mono.cols()) throw Error(ErrorCode::NoFactorization, "factor_through: not a monomorphism");
  auto fam = solve_matrix(mono, m, m.dom());
  if (!fam) throw Error(ErrorCode::NoFactorization, m.dom().name() + " -> " + m.cod().name() + " does not factor through " + mono.dom().name());
  return fam->particular;
}

bool factors_through(const LinMap& m, const LinMap& mono) {
  return solve_matrix(mono, m, m.dom()).has_value();
}

bool same_image(const LinMap& a, const LinMap& b) {
  return factors_through(a, b) && factors_through(b, a);
}

LinMap inverse(const LinMap& f) {
  if (f.rows() != f.cols() || f.rank() != f.cols())
    throw Error(ErrorCode::NotInvertible, f.dom().name() + " -> " + f.cod().name());
  auto fam = solve_matrix(f, LinMap::identity(f.cod(), f.field()), f.cod());
  return fam->particular;
}

// ---------------------------------------------------------------- families

std::uint64_t AffineFamily::count() const {
  const std::uint64_t p = particular.field().size();
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    n *= p;
  }
  return n;
}

LinMap AffineFamily::member(std::uint64_t index) const {
  const std::uint64_t p = particular.field().size();
  LinMap out = particular;
  for (const auto& d : directions) {
    long c = static_cast<long>(index % p);
    index /= p;
    if (c) out = out + Scalar(out.field(), c) * d;
  }
  return out;
}

LinearSystem::LinearSystem(Space dom, Space cod, FieldSpec f)
    : dom_(std::move(dom)), cod_(std::move(cod)), field_(f) {}

void LinearSystem::add(const Op& op, const LinMap& rhs) {
  const std::size_t nr = cod_.dim(), nc = dom_.dim(), unknowns = nr * nc;
  const std::size_t first = rows_.size(), eqs = rhs.rows() * rhs.cols();
  rows_.resize(first + eqs, std::vector<Scalar>(unknowns + 1, Scalar::zero(field_)));
  for (std::size_t u = 0; u < unknowns; ++u) {
    LinMap e(dom_, cod_, field_);
    e.set(u / nc, u % nc, 1);
    LinMap img = op(e);
    if (img.rows() != rhs.rows() || img.cols() != rhs.cols())
      throw Error(ErrorCode::ShapeMismatch, "LinearSystem::add: operator and rhs shapes differ");
    // equation index q = row * cols + col, matching the unknown layout
    for (std::size_t c = 0; c < img.cols(); ++c)
      for (const auto& [r, v] : img.col(c)) rows_[first + r * img.cols() + c][u] = v;
  }
  for (std::size_t c = 0; c < rhs.cols(); ++c)
    for (const auto& [r, v] : rhs.col(c)) rows_[first + r * rhs.cols() + c][unknowns] = v;
}

void LinearSystem::fix_column(std::size_t col, const std::vector<Scalar>& value) {
  const std::size_t nr = cod_.dim(), nc = dom_.dim(), unknowns = nr * nc;
  for (std::size_t r = 0; r < nr; ++r) {
    std::vector<Scalar> row(unknowns + 1, Scalar::zero(field_));
    row[r * nc + col] = Scalar::one(field_);
    row[unknowns] = value[r];
    rows_.push_back(std::move(row));
  }
}

std::optional<AffineFamily> LinearSystem::solve() const {
  const std::size_t nr = cod_.dim(), nc = dom_.dim(), unknowns = nr * nc;
  Matrix m(rows_.size(), unknowns + 1, field_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j <= unknowns; ++j) m(i, j) = rows_[i][j];
  auto pivots = rref(m);
  if (!pivots.empty() && pivots.back() == unknowns) return std::nullopt;
  AffineFamily fam{LinMap(dom_, cod_, field_), {}};
  std::vector<bool> is_pivot(unknowns, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    fam.particular.put(pivots[r] / nc, pivots[r] % nc, m(r, unknowns));
  }
  for (std::size_t u = 0; u < unknowns; ++u) {
    if (is_pivot[u]) continue;
    LinMap d(dom_, cod_, field_);
    d.set(u / nc, u % nc, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!m(r, u).is_zero()) d.put(pivots[r] / nc, pivots[r] % nc, -m(r, u));
    fam.directions.push_back(std::move(d));
  }
  return fam;
}

}  // namespace whopf
