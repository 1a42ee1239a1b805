#include "singvec/pbw.hpp"

#include <algorithm>
#include <numeric>

#include "singvec/error.hpp"

namespace singvec {

PBWOrder PBWOrder::from_negatives(const BracketTable& table, std::vector<int> negatives) {
  PBWOrder o;
  o.num_negative_ = static_cast<int>(negatives.size());
  o.basis_at_ = std::move(negatives);
  for (int k = 0; k < table.rank(); ++k) o.basis_at_.push_back(table.cartan(k));
  for (int r = 0; r < table.num_roots(); ++r) o.basis_at_.push_back(table.positive(r));
  o.position_.assign(table.dim(), -1);
  for (std::size_t p = 0; p < o.basis_at_.size(); ++p) {
    auto id = static_cast<std::size_t>(o.basis_at_[p]);
    if (o.position_.at(id) != -1) throw Error(ErrorKind::WrongOrder, "basis element listed twice in order");
    o.position_[id] = static_cast<int>(p);
  }
  return o;
}

namespace {

std::vector<int> default_negatives(const BracketTable& table) {
  std::vector<int> neg(static_cast<std::size_t>(table.num_roots()));
  std::iota(neg.begin(), neg.end(), 0);
  const auto& alg = table.algebra();
  std::vector<Rational> height;
  for (int r = 0; r < table.num_roots(); ++r) height.push_back(alg.height(alg.positive_root(r).weight));
  std::stable_sort(neg.begin(), neg.end(), [&](int a, int b) {
    return height[static_cast<std::size_t>(table.element(a).root)] < height[static_cast<std::size_t>(table.element(b).root)];
  });
  return neg;
}

}  // namespace

PBWOrder PBWOrder::standard(const BracketTable& table, std::optional<int> rightmost) {
  auto neg = default_negatives(table);
  if (rightmost) {
    auto it = std::find(neg.begin(), neg.end(), *rightmost);
    if (it == neg.end()) throw Error(ErrorKind::WrongOrder, table.label(*rightmost) + " is not a negative root vector");
    neg.erase(it);
    neg.push_back(*rightmost);
  }
  return from_negatives(table, std::move(neg));
}

PBWOrder PBWOrder::with_negative_sequence(const BracketTable& table, const std::vector<int>& sequence) {
  std::vector<int> neg;
  for (int id : default_negatives(table))
    if (std::find(sequence.begin(), sequence.end(), id) == sequence.end()) neg.push_back(id);
  for (int id : sequence) {
    if (id < 0 || id >= static_cast<int>(table.dim()) || table.element(id).kind != BasisKind::NegativeRoot)
      throw Error(ErrorKind::WrongOrder, "order sequence contains a non-negative basis element");
    neg.push_back(id);
  }
  return from_negatives(table, std::move(neg));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : m) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h ^ m.size();
}

UEAElement UEAElement::scalar(const Rational& c) {
  UEAElement e;
  e.add(Monomial{}, c);
  return e;
}

Rational UEAElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<Monomial, Rational>> UEAElement::sorted_terms() const {
  std::vector<std::pair<Monomial, Rational>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

void UEAElement::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void UEAElement::add(const UEAElement& x, const Rational& c) {
  if (c == 0) return;
  if (c == 1) {
    for (const auto& [m, v] : x.terms_) add(m, v);
  } else {
    for (const auto& [m, v] : x.terms_) add(m, c * v);
  }
}

UEAElement& UEAElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

PBWAlgebra::PBWAlgebra(std::shared_ptr<const BracketTable> table, PBWOrder order)
    : table_(std::move(table)), order_(std::move(order)) {
  const std::size_t n = order_.size();
  if (n != table_->dim()) throw Error(ErrorKind::WrongOrder, "order does not cover the basis of g");
  if (n > 0xffff) throw Error(ErrorKind::InvalidParams, "algebra too large for monomial encoding");
  auto to_positions = [&](const GVector& v) {
    GVector out;
    for (const auto& t : v) out.push_back({order_.position(t.index), t.coeff});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    return out;
  };
  odd_.resize(n);
  half_square_.resize(n);
  bracket_.assign(n, std::vector<GVector>(n));
  memo_.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    const int a = order_.basis_at(static_cast<int>(p));
    odd_[p] = table_->odd(a);
    for (std::size_t q = 0; q < n; ++q) bracket_[p][q] = to_positions(table_->bracket(a, order_.basis_at(static_cast<int>(q))));
    if (odd_[p]) {
      half_square_[p] = bracket_[p][p];
      for (auto& t : half_square_[p]) t.coeff /= 2;
    }
  }
}

UEAElement PBWAlgebra::generator(int basis_id) const {
  UEAElement e;
  e.add(Monomial{static_cast<std::uint16_t>(order_.position(basis_id))}, 1);
  return e;
}

UEAElement PBWAlgebra::from_vector(const GVector& x) const {
  UEAElement e;
  for (const auto& t : x) e.add(Monomial{static_cast<std::uint16_t>(order_.position(t.index))}, t.coeff);
  return e;
}

const UEAElement& PBWAlgebra::lmul(int pos, const Monomial& m) {
  auto& memo = memo_[static_cast<std::size_t>(pos)];
  if (auto it = memo.find(m); it != memo.end()) return it->second;

  UEAElement out;
  const auto x = static_cast<std::uint16_t>(pos);
  if (m.empty() || x < m.front() || (x == m.front() && !odd_[x])) {
    Monomial nm;
    nm.reserve(m.size() + 1);
    nm.push_back(x);
    nm.insert(nm.end(), m.begin(), m.end());
    out.add(nm, 1);
  } else {
    const Monomial rest(m.begin() + 1, m.end());
    const std::uint16_t y = m.front();
    if (x == y) {
      // x odd: x x = ½[x, x]
      for (const auto& t : half_square_[x]) lmul_into(t.index, rest, t.coeff, out);
    } else {
      // x y = ±y x + [x, y]
      const Rational sign = (odd_[x] && odd_[y]) ? -1 : 1;
      const UEAElement& xr = lmul(pos, rest);
      for (const auto& [mm, c] : xr.terms()) lmul_into(y, mm, sign * c, out);
      for (const auto& t : bracket_[x][y]) lmul_into(t.index, rest, t.coeff, out);
    }
  }
  return memo.emplace(m, std::move(out)).first->second;
}

void PBWAlgebra::lmul_into(int pos, const Monomial& m, const Rational& coeff, UEAElement& out) {
  if (coeff == 0) return;
  out.add(lmul(pos, m), coeff);
}

UEAElement PBWAlgebra::left_multiply(int basis_id, const UEAElement& b) {
  const int pos = order_.position(basis_id);
  UEAElement out;
  for (const auto& [m, c] : b.terms()) lmul_into(pos, m, c, out);
  return out;
}

UEAElement PBWAlgebra::word(const std::vector<int>& basis_ids) {
  UEAElement cur = one();
  for (auto it = basis_ids.rbegin(); it != basis_ids.rend(); ++it) cur = left_multiply(*it, cur);
  return cur;
}

UEAElement PBWAlgebra::power(int basis_id, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidParams, "negative exponent");
  return word(std::vector<int>(static_cast<std::size_t>(k), basis_id));
}

UEAElement PBWAlgebra::multiply(const UEAElement& a, const UEAElement& b) {
  UEAElement out;
  for (const auto& [m, c] : a.terms()) {
    UEAElement cur = b;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
      UEAElement next;
      for (const auto& [mm, cc] : cur.terms()) lmul_into(*it, mm, cc, next);
      cur = std::move(next);
    }
    out.add(cur, c);
  }
  return out;
}

UEAElement PBWAlgebra::right_divide(const UEAElement& x, int g, int p) const {
  if (p < 0) throw Error(ErrorKind::InvalidParams, "negative exponent");
  if (order_.rightmost_negative() != g)
    throw Error(ErrorKind::WrongOrder, table_->label(g) + " is not the rightmost negative generator");
  if (table_->odd(g)) throw Error(ErrorKind::InvalidParams, "right division by an odd generator");
  const auto gp = static_cast<std::uint16_t>(order_.position(g));
  UEAElement out;
  for (const auto& [m, c] : x.terms()) {
    if (!m.empty() && !order_.is_negative_position(m.back()))
      throw Error(ErrorKind::WrongOrder, "right division of an element outside U(n-)");
    int tail = 0;
    while (tail < static_cast<int>(m.size()) && m[m.size() - 1 - static_cast<std::size_t>(tail)] == gp) ++tail;
    if (tail < p)
      throw Error(ErrorKind::NotDivisible, "term " + render(m) + " has fewer than " + std::to_string(p) + " trailing " +
                                               table_->label(g));
    out.add(Monomial(m.begin(), m.end() - p), c);
  }
  return out;
}

UEAElement PBWAlgebra::import(const UEAElement& x, const PBWAlgebra& from) {
  if (from.table_ != table_ && from.table_->dim() != table_->dim())
    throw Error(ErrorKind::InvalidParams, "import between different algebras");
  if (from.order_ == order_) return x;
  UEAElement out;
  for (const auto& [m, c] : x.terms()) out.add(word(from.basis_ids(m)), c);
  return out;
}

Weight PBWAlgebra::weight(const Monomial& m) const {
  Weight w = table_->algebra().zero();
  for (auto p : m) w += table_->weight(order_.basis_at(p));
  return w;
}

Weight PBWAlgebra::weight(const UEAElement& x) const {
  std::optional<Weight> w;
  for (const auto& [m, c] : x.terms()) {
    Weight v = weight(m);
    if (!w) {
      w = std::move(v);
    } else if (*w != v) {
      throw Error(ErrorKind::Inhomogeneous, "element mixes weights");
    }
  }
  return w ? *w : table_->algebra().zero();
}

bool PBWAlgebra::odd(const Monomial& m) const {
  bool o = false;
  for (auto p : m) o ^= static_cast<bool>(odd_[p]);
  return o;
}

Monomial PBWAlgebra::monomial(std::vector<int> basis_ids) const {
  Monomial m;
  for (int id : basis_ids) m.push_back(static_cast<std::uint16_t>(order_.position(id)));
  std::sort(m.begin(), m.end());
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i] == m[i - 1] && odd_[m[i]])
      throw Error(ErrorKind::WrongOrder, "odd generator " + table_->label(order_.basis_at(m[i])) + " repeated");
  return m;
}

std::vector<int> PBWAlgebra::basis_ids(const Monomial& m) const {
  std::vector<int> ids;
  ids.reserve(m.size());
  for (auto p : m) ids.push_back(order_.basis_at(p));
  return ids;
}

std::string PBWAlgebra::render(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!out.empty()) out += ' ';
    out += table_->label(order_.basis_at(m[i]));
    if (j - i > 1) out += "^{" + std::to_string(j - i) + "}";
    i = j;
  }
  return out;
}

std::string PBWAlgebra::render(const UEAElement& x, std::string_view suffix) const {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.sorted_terms()) {
    if (!out.empty()) out += " + ";
    std::string body = render(m);
    if (!suffix.empty()) {
      if (!body.empty()) body += ' ';
      body += suffix;
    }
    out += to_string(c);
    if (!body.empty()) out += " · " + body;
  }
  return out;
}

}  // namespace singvec
