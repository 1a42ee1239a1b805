#include "singvec/superalgebra.hpp"

#include <map>
#include <sstream>

#include "singvec/error.hpp"

namespace singvec {

void axpy(GVector& y, const Rational& a, const GVector& x) {
  if (a == 0 || x.empty()) return;
  GVector out;
  out.reserve(y.size() + x.size());
  auto i = y.begin();
  auto j = x.begin();
  while (i != y.end() || j != x.end()) {
    if (j == x.end() || (i != y.end() && i->index < j->index)) {
      out.push_back(std::move(*i++));
    } else if (i == y.end() || j->index < i->index) {
      out.push_back({j->index, a * j->coeff});
      ++j;
    } else {
      Rational c = i->coeff + a * j->coeff;
      if (c != 0) out.push_back({i->index, std::move(c)});
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

namespace {

using Vec = std::vector<Rational>;
using Key = std::vector<int>;

/// One root space of n^- or n^+ during the level-by-level construction.
struct Space {
  Key key;
  int level = 0;
  bool odd = false;
  // (simple index i, basis index b of the source space key - unit_i); b = -1 at level 1.
  std::vector<std::pair<int, int>> origin;
  // raise[j][b]: [R_j, x_b] in space key - unit_j (in h at level 1); empty means zero.
  std::vector<std::vector<Vec>> raise;
  // extend[i][b]: [L_i, x_b] in space key + unit_i; empty means zero.
  std::vector<std::vector<Vec>> extend;

  std::size_t dim() const { return origin.size(); }
};

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Picks a maximal independent subset of rows in order and expresses every
/// row in terms of it.
void select_basis(const std::vector<Vec>& rows, std::vector<std::size_t>& chosen, std::vector<Vec>& coords) {
  struct Pivot {
    std::size_t col;
    Vec row;
    Vec expr;  // row expressed in chosen basis elements
  };
  std::vector<Pivot> pivots;
  chosen.clear();
  std::vector<Vec> expr_of_row(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Vec v = rows[r];
    Vec expr;
    for (const auto& p : pivots) {
      if (v[p.col] == 0) continue;
      Rational f = v[p.col] / p.row[p.col];
      for (std::size_t c = 0; c < v.size(); ++c)
        if (p.row[c] != 0) v[c] -= f * p.row[c];
      if (expr.size() < p.expr.size()) expr.resize(p.expr.size(), Rational(0));
      for (std::size_t c = 0; c < p.expr.size(); ++c) expr[c] += f * p.expr[c];
    }
    std::size_t col = 0;
    while (col < v.size() && v[col] == 0) ++col;
    if (col == v.size()) {
      expr_of_row[r] = expr;
      continue;
    }
    std::size_t b = chosen.size();
    chosen.push_back(r);
    // v = row_r - sum f_p pivot_p  =>  expr(v) = e_b - expr
    Vec pe(b + 1, Rational(0));
    for (std::size_t c = 0; c < expr.size(); ++c) pe[c] = -expr[c];
    pe[b] = 1;
    pivots.push_back({col, v, pe});
    Vec self(b + 1, Rational(0));
    self[b] = 1;
    expr_of_row[r] = self;
  }
  coords.assign(rows.size(), Vec(chosen.size(), Rational(0)));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < expr_of_row[r].size(); ++c) coords[r][c] = expr_of_row[r][c];
}

/// Constructs n^- (sign = -1, L = f, R = e) or n^+ (sign = +1, L = e, R = f).
class SideBuilder {
 public:
  SideBuilder(const RationalMatrix& cartan, const std::vector<bool>& odd_simple, int sign)
      : a_(cartan), odd_(odd_simple), sign_(sign), r_(static_cast<int>(odd_simple.size())) {}

  std::map<Key, Space> build() {
    std::map<Key, Space> spaces;
    std::vector<Key> level;
    for (int i = 0; i < r_; ++i) {
      Space s;
      s.key = unit(i);
      s.level = 1;
      s.odd = odd_[static_cast<std::size_t>(i)];
      s.origin = {{i, -1}};
      s.raise.assign(static_cast<std::size_t>(r_), std::vector<Vec>(1));
      Vec h(static_cast<std::size_t>(r_), Rational(0));
      h[static_cast<std::size_t>(i)] = bracket_scale(i);
      s.raise[static_cast<std::size_t>(i)][0] = h;
      s.extend.assign(static_cast<std::size_t>(r_), std::vector<Vec>(1));
      level.push_back(s.key);
      spaces.emplace(s.key, std::move(s));
    }
    for (int depth = 1; !level.empty(); ++depth) {
      if (depth > 1000) throw Error(ErrorKind::ClosureFailure, "root space construction does not terminate");
      std::map<Key, std::vector<std::pair<int, int>>> targets;  // T -> (i, b)
      for (const auto& k : level) {
        const Space& s = spaces.at(k);
        for (int i = 0; i < r_; ++i) {
          Key t = k;
          ++t[static_cast<std::size_t>(i)];
          for (int b = 0; b < static_cast<int>(s.dim()); ++b) targets[t].push_back({i, b});
        }
      }
      std::vector<Key> next;
      for (auto& [t, cands] : targets) {
        std::stable_sort(cands.begin(), cands.end());
        // Concatenated image layout over j.
        std::vector<std::ptrdiff_t> offset(static_cast<std::size_t>(r_), -1);
        std::vector<const Space*> target_space(static_cast<std::size_t>(r_), nullptr);
        std::size_t total = 0;
        for (int j = 0; j < r_; ++j) {
          Key v = t;
          if (--v[static_cast<std::size_t>(j)] < 0) continue;
          auto it = spaces.find(v);
          if (it == spaces.end() || it->second.dim() == 0) continue;
          offset[static_cast<std::size_t>(j)] = static_cast<std::ptrdiff_t>(total);
          target_space[static_cast<std::size_t>(j)] = &it->second;
          total += it->second.dim();
        }
        std::vector<Vec> rows;
        for (const auto& [i, b] : cands) rows.push_back(image(spaces, t, i, b, offset, total));
        std::vector<std::size_t> chosen;
        std::vector<Vec> coords;
        select_basis(rows, chosen, coords);

        for (std::size_t c = 0; c < cands.size(); ++c) {
          Key src = t;
          --src[static_cast<std::size_t>(cands[c].first)];
          Space& s = spaces.at(src);
          if (!chosen.empty())
            s.extend[static_cast<std::size_t>(cands[c].first)][static_cast<std::size_t>(cands[c].second)] = coords[c];
        }
        if (chosen.empty()) continue;
        Space ns;
        ns.key = t;
        ns.level = depth + 1;
        int parity = 0;
        for (int i = 0; i < r_; ++i)
          if (odd_[static_cast<std::size_t>(i)]) parity += t[static_cast<std::size_t>(i)];
        ns.odd = parity % 2 != 0;
        ns.raise.assign(static_cast<std::size_t>(r_), std::vector<Vec>(chosen.size()));
        ns.extend.assign(static_cast<std::size_t>(r_), std::vector<Vec>(chosen.size()));
        for (std::size_t b = 0; b < chosen.size(); ++b) {
          ns.origin.push_back(cands[chosen[b]]);
          const Vec& row = rows[chosen[b]];
          for (int j = 0; j < r_; ++j) {
            auto off = offset[static_cast<std::size_t>(j)];
            if (off < 0) continue;
            Vec seg(row.begin() + off, row.begin() + off + static_cast<std::ptrdiff_t>(target_space[static_cast<std::size_t>(j)]->dim()));
            if (!is_zero(seg)) ns.raise[static_cast<std::size_t>(j)][b] = std::move(seg);
          }
        }
        next.push_back(t);
        spaces.emplace(t, std::move(ns));
      }
      level = std::move(next);
    }
    return spaces;
  }

  /// [R_i, L_i] = bracket_scale(i) * h_i.
  Rational bracket_scale(int i) const {
    if (sign_ < 0) return 1;
    return odd_[static_cast<std::size_t>(i)] ? Rational(1) : Rational(-1);
  }

  /// <weight of elements in space key, h_i>.
  Rational weight_pairing(int i, const Key& key) const {
    Rational s = 0;
    for (int t = 0; t < r_; ++t) s += key[static_cast<std::size_t>(t)] * a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
    return sign_ * s;
  }

 private:
  Key unit(int i) const {
    Key k(static_cast<std::size_t>(r_), 0);
    k[static_cast<std::size_t>(i)] = 1;
    return k;
  }

  // [R_j, [L_i, x_b]] for all j, concatenated.
  Vec image(const std::map<Key, Space>& spaces, const Key& t, int i, int b,
            const std::vector<std::ptrdiff_t>& offset, std::size_t total) const {
    Vec row(total, Rational(0));
    Key src = t;
    --src[static_cast<std::size_t>(i)];
    const Space& s = spaces.at(src);
    const bool odd_i = odd_[static_cast<std::size_t>(i)];
    for (int j = 0; j < r_; ++j) {
      auto off = offset[static_cast<std::size_t>(j)];
      if (off < 0) continue;
      if (j == i) row[static_cast<std::size_t>(off + b)] += bracket_scale(i) * weight_pairing(i, src);
      const Rational sgn = (odd_i && odd_[static_cast<std::size_t>(j)]) ? -1 : 1;
      if (s.level == 1) {
        const int simple = s.origin[0].first;
        if (j != simple) continue;
        // [L_i, h_s] = -<sign*a_i, h_s> L_i, landing in the level-1 space of a_i.
        Rational c = -Rational(sign_) * a_[static_cast<std::size_t>(simple)][static_cast<std::size_t>(i)];
        row[static_cast<std::size_t>(off)] += sgn * bracket_scale(simple) * c;
        continue;
      }
      const Vec& y = s.raise[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)];
      if (y.empty()) continue;
      Key u = src;
      --u[static_cast<std::size_t>(j)];
      const Space& us = spaces.at(u);
      for (std::size_t k = 0; k < y.size(); ++k) {
        if (y[k] == 0) continue;
        const Vec& ext = us.extend[static_cast<std::size_t>(i)][k];
        for (std::size_t c = 0; c < ext.size(); ++c)
          if (ext[c] != 0) row[static_cast<std::size_t>(off) + c] += sgn * y[k] * ext[c];
      }
    }
    return row;
  }

  const RationalMatrix& a_;
  std::vector<bool> odd_;
  int sign_;
  int r_;
};

struct SparseMatrix {
  std::vector<GVector> cols;
};

SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out{std::vector<GVector>(b.cols.size())};
  for (std::size_t c = 0; c < b.cols.size(); ++c)
    for (const auto& t : b.cols[c]) axpy(out.cols[c], t.coeff, a.cols[static_cast<std::size_t>(t.index)]);
  return out;
}

SparseMatrix supercommutator(const SparseMatrix& a, bool odd_a, const SparseMatrix& b, bool odd_b) {
  SparseMatrix ab = compose(a, b);
  SparseMatrix ba = compose(b, a);
  Rational s = (odd_a && odd_b) ? 1 : -1;
  for (std::size_t c = 0; c < ab.cols.size(); ++c) axpy(ab.cols[c], s, ba.cols[c]);
  return ab;
}

}  // namespace

BracketTable build_structure_constants(std::shared_ptr<const AlgebraData> alg) {
  const AlgebraData& data = *alg;
  const int r = static_cast<int>(data.rank());
  const int np = static_cast<int>(data.positive_roots().size());
  const auto& simple = data.simple_roots();

  BracketTable t;
  t.alg_ = alg;
  t.cartan_scale_.resize(static_cast<std::size_t>(r));
  std::vector<bool> odd_simple(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    const auto& w = simple[static_cast<std::size_t>(i)].weight;
    Rational nn = data.form(w, w);
    t.cartan_scale_[static_cast<std::size_t>(i)] = nn == 0 ? Rational(1) : Rational(2) / nn;
    odd_simple[static_cast<std::size_t>(i)] = simple[static_cast<std::size_t>(i)].odd();
  }
  // cartan[k][s] = <a_s, h_k>
  RationalMatrix cartan(static_cast<std::size_t>(r), std::vector<Rational>(static_cast<std::size_t>(r)));
  for (int k = 0; k < r; ++k)
    for (int s = 0; s < r; ++s)
      cartan[k][s] = t.cartan_scale_[k] * data.form(simple[k].weight, simple[s].weight);

  auto neg = SideBuilder(cartan, odd_simple, -1).build();
  auto pos = SideBuilder(cartan, odd_simple, +1).build();

  auto root_of = [&](const Key& key) {
    Weight w = data.zero();
    for (int s = 0; s < r; ++s) w += Rational(key[s]) * simple[s].weight;
    auto found = data.find_root(w);
    if (!found || !found->positive)
      throw Error(ErrorKind::ClosureFailure, "generated weight " + data.label(w) + " is not a positive root");
    return found->index;
  };
  std::map<Key, int> root_index;
  std::vector<Key> key_of(static_cast<std::size_t>(np));
  std::vector<int> seen(static_cast<std::size_t>(np), 0);
  for (const auto& [key, space] : neg) {
    if (space.dim() != 1)
      throw Error(ErrorKind::ClosureFailure, "root space of dimension " + std::to_string(space.dim()));
    int idx = root_of(key);
    if (data.positive_root(idx).odd() != space.odd)
      throw Error(ErrorKind::ClosureFailure, "parity mismatch at " + data.label(data.positive_root(idx).weight));
    root_index[key] = idx;
    key_of[static_cast<std::size_t>(idx)] = key;
    ++seen[static_cast<std::size_t>(idx)];
  }
  for (int i = 0; i < np; ++i)
    if (seen[static_cast<std::size_t>(i)] != 1)
      throw Error(ErrorKind::ClosureFailure,
                  "root " + data.label(data.positive_root(i).weight) + " not generated exactly once");
  if (pos.size() != neg.size()) throw Error(ErrorKind::ClosureFailure, "n+ and n- differ in size");
  for (const auto& [key, space] : pos)
    if (!neg.count(key) || space.dim() != 1) throw Error(ErrorKind::ClosureFailure, "n+ and n- root sets differ");

  const int dim = 2 * np + r;
  t.basis_.resize(static_cast<std::size_t>(dim));
  for (int i = 0; i < np; ++i) {
    bool odd = data.positive_root(i).odd();
    t.basis_[t.negative(i)] = {BasisKind::NegativeRoot, i, -1, odd};
    t.basis_[t.positive(i)] = {BasisKind::PositiveRoot, i, -1, odd};
  }
  for (int k = 0; k < r; ++k) t.basis_[t.cartan(k)] = {BasisKind::Cartan, -1, k, false};

  auto h_vector = [&](const Vec& v) {
    GVector g;
    for (int k = 0; k < r; ++k)
      if (v[k] != 0) g.push_back({t.cartan(k), v[k]});
    return g;
  };
  auto unit_key = [&](int i) {
    Key k(static_cast<std::size_t>(r), 0);
    k[i] = 1;
    return k;
  };
  auto shifted = [&](const Key& k, int j, int d) {
    Key o = k;
    o[j] += d;
    return o;
  };
  auto pairing = [&](int k, const Key& key) {
    Rational s = 0;
    for (int u = 0; u < r; ++u) s += key[u] * cartan[k][u];
    return s;
  };

  std::vector<SparseMatrix> ad_e(r, SparseMatrix{std::vector<GVector>(dim)});
  std::vector<SparseMatrix> ad_f(r, SparseMatrix{std::vector<GVector>(dim)});
  std::vector<SparseMatrix> ad_h(r, SparseMatrix{std::vector<GVector>(dim)});
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < np; ++i) {
      const Key& key = key_of[i];
      const Space& ns = neg.at(key);
      const Space& ps = pos.at(key);
      // e_j on f_root
      const Vec& up = ns.raise[j][0];
      if (ns.level == 1) {
        if (!up.empty()) ad_e[j].cols[t.negative(i)] = h_vector(up);
      } else if (!up.empty()) {
        ad_e[j].cols[t.negative(i)] = {{t.negative(root_index.at(shifted(key, j, -1))), up[0]}};
      }
      // f_j on f_root
      const Vec& nx = ns.extend[j][0];
      if (!nx.empty() && nx[0] != 0)
        ad_f[j].cols[t.negative(i)] = {{t.negative(root_index.at(shifted(key, j, +1))), nx[0]}};
      // e_j on e_root
      const Vec& px = ps.extend[j][0];
      if (!px.empty() && px[0] != 0)
        ad_e[j].cols[t.positive(i)] = {{t.positive(root_index.at(shifted(key, j, +1))), px[0]}};
      // f_j on e_root
      const Vec& down = ps.raise[j][0];
      if (ps.level == 1) {
        if (!down.empty()) ad_f[j].cols[t.positive(i)] = h_vector(down);
      } else if (!down.empty()) {
        ad_f[j].cols[t.positive(i)] = {{t.positive(root_index.at(shifted(key, j, -1))), down[0]}};
      }
      Rational w = pairing(j, key);
      if (w != 0) {
        ad_h[j].cols[t.negative(i)] = {{t.negative(i), -w}};
        ad_h[j].cols[t.positive(i)] = {{t.positive(i), w}};
      }
    }
    const int sj = root_index.at(unit_key(j));
    for (int k = 0; k < r; ++k) {
      if (cartan[k][j] == 0) continue;
      ad_e[j].cols[t.cartan(k)] = {{t.positive(sj), -cartan[k][j]}};
      ad_f[j].cols[t.cartan(k)] = {{t.negative(sj), cartan[k][j]}};
    }
  }

  std::vector<SparseMatrix> ad(static_cast<std::size_t>(dim));
  t.construction_.assign(static_cast<std::size_t>(dim), std::nullopt);
  for (int k = 0; k < r; ++k) ad[t.cartan(k)] = ad_h[k];
  // Level order guarantees sources are built first.
  std::vector<std::pair<int, Key>> by_level;
  for (const auto& [key, space] : neg) by_level.push_back({space.level, key});
  std::stable_sort(by_level.begin(), by_level.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [lvl, key] : by_level) {
    const int idx = root_index.at(key);
    if (lvl == 1) {
      int j = 0;
      while (key[j] == 0) ++j;
      ad[t.negative(idx)] = ad_f[j];
      ad[t.positive(idx)] = ad_e[j];
      continue;
    }
    for (int side = 0; side < 2; ++side) {
      const Space& sp = side == 0 ? neg.at(key) : pos.at(key);
      const int i = sp.origin[0].first;
      const int src = root_index.at(shifted(key, i, -1));
      const int gen = side == 0 ? t.negative(root_index.at(unit_key(i))) : t.positive(root_index.at(unit_key(i)));
      const int src_id = side == 0 ? t.negative(src) : t.positive(src);
      const int id = side == 0 ? t.negative(idx) : t.positive(idx);
      ad[id] = supercommutator(ad[gen], t.basis_[gen].odd, ad[src_id], t.basis_[src_id].odd);
      t.construction_[id] = std::make_pair(gen, src_id);
    }
  }
  t.table_.assign(static_cast<std::size_t>(dim), std::vector<GVector>(static_cast<std::size_t>(dim)));
  for (int a = 0; a < dim; ++a) t.table_[a] = std::move(ad[a].cols);
  return t;
}

std::optional<int> BracketTable::root_vector(const Weight& w) const {
  auto r = algebra().find_root(w);
  if (!r) return std::nullopt;
  return r->positive ? positive(r->index) : negative(r->index);
}

int BracketTable::root_vector(std::string_view label) const {
  auto id = root_vector(algebra().parse_label(label));
  if (!id) throw Error(ErrorKind::Parse, "'" + std::string(label) + "' is not a root");
  return *id;
}

Weight BracketTable::weight(int id) const {
  const auto& b = element(id);
  switch (b.kind) {
    case BasisKind::NegativeRoot: return -algebra().positive_root(b.root).weight;
    case BasisKind::PositiveRoot: return algebra().positive_root(b.root).weight;
    case BasisKind::Cartan: break;
  }
  return algebra().zero();
}

GVector BracketTable::bracket(int a, const GVector& y) const {
  GVector out;
  for (const auto& t : y) axpy(out, t.coeff, bracket(a, t.index));
  return out;
}

GVector BracketTable::bracket(const GVector& x, const GVector& y) const {
  GVector out;
  for (const auto& t : x) axpy(out, t.coeff, bracket(t.index, y));
  return out;
}

Rational BracketTable::evaluate(const Weight& mu, int simple) const {
  return cartan_scale_[static_cast<std::size_t>(simple)] *
         algebra().form(mu, algebra().simple_roots()[static_cast<std::size_t>(simple)].weight);
}

Rational BracketTable::evaluate(const Weight& mu, const GVector& h) const { return algebra().form(mu, cartan_dual(h)); }

Weight BracketTable::cartan_dual(const GVector& h) const {
  Weight w = algebra().zero();
  for (const auto& t : h) {
    const auto& b = element(t.index);
    if (b.kind != BasisKind::Cartan) throw Error(ErrorKind::InvalidParams, "cartan_dual of a non-Cartan element");
    w += (t.coeff * cartan_scale_[static_cast<std::size_t>(b.cartan)]) *
         algebra().simple_roots()[static_cast<std::size_t>(b.cartan)].weight;
  }
  return w;
}

GVector BracketTable::coroot(const Weight& beta) const {
  Rational bb = algebra().form(beta, beta);
  if (bb == 0) throw Error(ErrorKind::IsotropicCoroot, algebra().label(beta) + " is isotropic");
  auto c = algebra().simple_coordinates((Rational(2) / bb) * beta);
  GVector h;
  for (int k = 0; k < rank(); ++k)
    if (c[static_cast<std::size_t>(k)] != 0)
      h.push_back({cartan(k), c[static_cast<std::size_t>(k)] / cartan_scale_[static_cast<std::size_t>(k)]});
  return h;
}

std::optional<std::pair<int, int>> BracketTable::construction(int id) const {
  return construction_.at(static_cast<std::size_t>(id));
}

std::string BracketTable::label(int id) const {
  const auto& b = element(id);
  const auto& a = algebra();
  switch (b.kind) {
    case BasisKind::NegativeRoot: return "f_{" + a.label(a.positive_root(b.root).weight) + "}";
    case BasisKind::PositiveRoot: return "e_{" + a.label(a.positive_root(b.root).weight) + "}";
    case BasisKind::Cartan: return "h_{" + a.label(a.simple_roots()[static_cast<std::size_t>(b.cartan)].weight) + "}";
  }
  return "?";
}

std::string BracketTable::render(const GVector& x) const {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& t : x) {
    if (!out.empty()) out += " + ";
    out += to_string(t.coeff) + "·" + label(t.index);
  }
  return out;
}

std::string BracketTable::dump() const {
  std::ostringstream os;
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b) {
      const auto& v = table_[a][b];
      if (v.empty()) continue;
      os << "[" << label(static_cast<int>(a)) << ", " << label(static_cast<int>(b)) << "] = " << render(v) << "\n";
    }
  return os.str();
}

void BracketTable::flip_sign(int a, int b) {
  for (auto& t : table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) t.coeff = -t.coeff;
  if (a != b)
    for (auto& t : table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]) t.coeff = -t.coeff;
}

JacobiReport check_jacobi(const BracketTable& table) {
  JacobiReport rep;
  const int dim = static_cast<int>(table.dim());
  auto fail = [&](std::string msg, std::vector<int> witness) {
    if (rep.violations++ == 0) {
      rep.first_violation = std::move(msg);
      rep.witness = std::move(witness);
    }
    rep.pass = false;
  };
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      ++rep.pairs_checked;
      GVector sum = table.bracket(a, b);
      axpy(sum, (table.odd(a) && table.odd(b)) ? Rational(-1) : Rational(1), table.bracket(b, a));
      if (!sum.empty())
        fail("antisymmetry fails for (" + table.label(a) + ", " + table.label(b) + ")", {a, b});
    }
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      const Rational sab = (table.odd(a) && table.odd(b)) ? -1 : 1;
      const GVector& ab = table.bracket(a, b);
      for (int c = 0; c < dim; ++c) {
        ++rep.triples_checked;
        // [a,[b,c]] - [[a,b],c] - (-1)^{|a||b|} [b,[a,c]]
        GVector lhs = table.bracket(a, table.bracket(b, c));
        GVector abc;
        for (const auto& t : ab) axpy(abc, t.coeff, table.bracket(t.index, c));
        axpy(lhs, -1, abc);
        axpy(lhs, -sab, table.bracket(b, table.bracket(a, c)));
        if (!lhs.empty())
          fail("super-Jacobi fails for (" + table.label(a) + ", " + table.label(b) + ", " + table.label(c) + ")",
               {a, b, c});
      }
    }
  return rep;
}

GradingReport check_grading(const BracketTable& table) {
  GradingReport rep;
  const auto& alg = table.algebra();
  const int dim = static_cast<int>(table.dim());
  auto fail = [&](const std::string& msg) {
    if (rep.pass) rep.first_violation = msg;
    rep.pass = false;
  };
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      Weight w = table.weight(a) + table.weight(b);
      for (const auto& t : table.bracket(a, b))
        if (table.weight(t.index) != w)
          fail("[" + table.label(a) + ", " + table.label(b) + "] has a component of the wrong weight");
    }
  for (int i = 0; i < table.num_roots(); ++i) {
    const Weight& alpha = alg.positive_root(i).weight;
    const GVector& h = table.bracket(table.positive(i), table.negative(i));
    Rational c = 0;
    if (h.empty()) {
      fail("[e, f] vanishes for " + alg.label(alpha));
    } else {
      Weight dual = table.cartan_dual(h);
      std::size_t k = 0;
      while (k < alpha.size() && alpha[k] == 0) ++k;
      c = dual[k] / alpha[k];
      if (c == 0 || dual != c * alpha) fail("[e, f] is not dual to a multiple of " + alg.label(alpha));
    }
    rep.cartan_factor.push_back(c);
  }
  return rep;
}

}  // namespace singvec

namespace singvec {

namespace {

/// Integer basis of {y : y^T A = 0} by unimodular row reduction of [A | I].
std::vector<std::vector<long>> integer_left_kernel(const std::vector<std::vector<long>>& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::vector<long>> m(rows, std::vector<long>(cols + rows, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    std::copy(a[i].begin(), a[i].end(), m[i].begin());
    m[i][cols + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      std::size_t piv = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (m[i][c] != 0 && (piv == rows || std::labs(m[i][c]) < std::labs(m[piv][c]))) piv = i;
      if (piv == rows) break;
      std::swap(m[r], m[piv]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        const long q = m[i][c] / m[r][c];
        for (std::size_t k = 0; k < cols + rows; ++k) m[i][k] -= q * m[r][k];
        if (m[i][c] != 0) done = false;
      }
      if (done) {
        ++r;
        break;
      }
    }
  }
  std::vector<std::vector<long>> kernel;
  for (std::size_t i = r; i < rows; ++i) kernel.emplace_back(m[i].begin() + static_cast<std::ptrdiff_t>(cols), m[i].end());
  return kernel;
}

Rational power(const Rational& x, long e) {
  Rational out = 1;
  const Rational base = e < 0 ? Rational(1) / x : x;
  for (long k = 0; k < std::labs(e); ++k) out *= base;
  return out;
}

}  // namespace

RescalingReport match_commutation_list(const BracketTable& table) {
  const auto& alg = table.algebra();
  const auto& c = alg.case_id();
  if (c.family != Family::BII) throw Error(ErrorKind::InvalidParams, "the reference commutation list is for B-II");
  const Weight d = alg.unit(static_cast<std::size_t>(c.m - 1));
  const Weight e = alg.unit(static_cast<std::size_t>(c.m + c.n - 1));
  // Rescaled vectors: A=e_{e+d} B=f_e D=e_d E=e_{e-d} F=e_{-d} G=e_{d-e} H=e_{-d-e} I=e_e
  const std::vector<Weight> vw = {e + d, -e, d, e - d, -d, d - e, -d - e, e};
  std::vector<int> ids;
  std::vector<std::string> names;
  for (const auto& w : vw) {
    ids.push_back(*table.root_vector(w));
    names.push_back(table.label(ids.back()));
  }
  enum { A, B, D, E, F, G, H, I };
  GVector hd = table.coroot(d);
  GVector he = table.coroot(e);
  GVector half_sum;
  axpy(half_sum, Rational(1, 2), hd);
  axpy(half_sum, Rational(1, 2), he);
  GVector half_d;
  axpy(half_d, Rational(1, 2), hd);
  struct Rel {
    int a, b, c;
    Rational k;
    const GVector* h;
  };
  const std::vector<Rel> rels = {{A, B, D, -1, nullptr}, {E, B, F, -1, nullptr}, {D, B, G, 1, nullptr},
                                 {F, B, H, 1, nullptr},  {E, G, -1, 1, &half_sum}, {E, D, I, -1, nullptr},
                                 {D, F, -1, 1, &half_d}, {D, H, B, -1, nullptr},   {G, F, B, 1, nullptr}};
  RescalingReport rep;
  std::vector<std::vector<long>> expo;
  std::vector<Rational> ratio;
  for (const auto& r : rels) {
    const GVector& ours = table.bracket(ids[r.a], ids[r.b]);
    std::string line = "[" + names[r.a] + ", " + names[r.b] + "] = " + table.render(ours) + "; reference ";
    Rational s = 0;
    std::vector<long> row(8, 0);
    ++row[r.a];
    ++row[r.b];
    if (r.h) {
      line += table.render(*r.h);
      if (!ours.empty() && ours.size() == r.h->size()) {
        s = ours[0].coeff / (*r.h)[0].coeff;
        GVector diff = ours;
        axpy(diff, -s, *r.h);
        if (!diff.empty()) s = 0;
      }
    } else {
      line += to_string(r.k) + "·" + names[r.c];
      if (ours.size() == 1 && ours[0].index == ids[r.c]) s = ours[0].coeff;
      --row[r.c];
    }
    rep.relations.push_back(line);
    if (s == 0) {
      rep.failure = "not proportional: " + line;
      return rep;
    }
    expo.push_back(row);
    ratio.push_back(r.k / s);
  }
  for (const auto& y : integer_left_kernel(expo)) {
    Rational prod = 1;
    for (std::size_t i = 0; i < y.size(); ++i) prod *= power(ratio[i], y[i]);
    if (prod != 1) {
      rep.failure = "no rescaling exists: an obstruction product equals " + to_string(prod);
      return rep;
    }
  }
  rep.pass = true;
  return rep;
}

}  // namespace singvec
