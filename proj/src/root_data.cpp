#include "singvec/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "singvec/error.hpp"

namespace singvec {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::BI: return "B-I";
    case Family::BII: return "B-II";
    case Family::DI: return "D-I";
    case Family::DII: return "D-II";
    case Family::F31: return "F31";
    case Family::G3: return "G3";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  for (Family f : {Family::BI, Family::BII, Family::DI, Family::DII, Family::F31, Family::G3})
    if (to_string(f) == text) return f;
  throw Error(ErrorKind::Parse, "unknown case family '" + std::string(text) + "'");
}

bool has_rank_params(Family f) { return f != Family::F31 && f != Family::G3; }

std::string to_string(const CaseId& c) {
  std::string out(to_string(c.family));
  if (has_rank_params(c.family)) out += ":m=" + std::to_string(c.m) + ",n=" + std::to_string(c.n);
  return out;
}

CaseId parse_case_id(std::string_view text) {
  CaseId c;
  auto colon = text.find(':');
  c.family = parse_family(text.substr(0, colon));
  if (!has_rank_params(c.family)) {
    if (colon != std::string_view::npos)
      throw Error(ErrorKind::Parse, "case " + std::string(to_string(c.family)) + " takes no parameters");
    return c;
  }
  if (colon == std::string_view::npos) throw Error(ErrorKind::Parse, "missing m,n in '" + std::string(text) + "'");
  auto rest = text.substr(colon + 1);
  bool have_m = false, have_n = false;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    auto item = rest.substr(0, comma);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::Parse, "bad case parameter '" + std::string(item) + "'");
    auto key = item.substr(0, eq);
    long value = 0;
    if (!to_int(parse_rational(item.substr(eq + 1)), value))
      throw Error(ErrorKind::Parse, "non-integer case parameter '" + std::string(item) + "'");
    if (key == "m") c.m = static_cast<int>(value), have_m = true;
    else if (key == "n") c.n = static_cast<int>(value), have_n = true;
    else throw Error(ErrorKind::Parse, "unknown case parameter '" + std::string(key) + "'");
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (!have_m || !have_n) throw Error(ErrorKind::Parse, "case '" + std::string(text) + "' needs both m and n");
  return c;
}

void validate(const CaseId& c) {
  switch (c.family) {
    case Family::BI:
    case Family::BII:
      if (c.m < 1 || c.n < 1) throw Error(ErrorKind::InvalidParams, to_string(c) + " requires m >= 1, n >= 1");
      break;
    case Family::DI:
    case Family::DII:
      if (c.m < 1 || c.n < 2) throw Error(ErrorKind::InvalidParams, to_string(c) + " requires m >= 1, n >= 2");
      break;
    case Family::F31:
    case Family::G3:
      if (c.m != 0 || c.n != 0) throw Error(ErrorKind::InvalidParams, std::string(to_string(c.family)) + " takes no m, n");
      break;
  }
}

std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::OddIsotropic: return "odd-isotropic";
    case Parity::OddNonisotropic: return "odd-nonisotropic";
  }
  return "?";
}

std::vector<RootDatum> AlgebraData::pos_even() const {
  std::vector<RootDatum> out;
  for (const auto& r : positive_)
    if (!r.odd()) out.push_back(r);
  return out;
}

std::vector<RootDatum> AlgebraData::pos_odd() const {
  std::vector<RootDatum> out;
  for (const auto& r : positive_)
    if (r.odd()) out.push_back(r);
  return out;
}

Rational AlgebraData::form(const Weight& a, const Weight& b) const {
  if (a.size() != dim() || b.size() != dim()) throw Error(ErrorKind::InvalidParams, "weight dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (form_[i][j] != 0 && b[j] != 0) s += a[i] * form_[i][j] * b[j];
  }
  return s;
}

Weight AlgebraData::unit(std::size_t i) const {
  Weight w(dim());
  w[i] = 1;
  return w;
}

std::optional<RootDatum> AlgebraData::find_root(const Weight& w) const {
  if (auto it = index_.find(w); it != index_.end()) return positive_[it->second];
  if (auto it = index_.find(-w); it != index_.end()) {
    RootDatum r = positive_[it->second];
    r.weight = w;
    r.positive = false;
    return r;
  }
  return std::nullopt;
}

std::vector<Rational> AlgebraData::simple_coordinates(const Weight& w) const {
  std::vector<Rational> out(rank(), Rational(0));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) out[i] += simple_inverse_[i][j] * w[j];
  return out;
}

Rational AlgebraData::height(const Weight& w) const {
  Rational h = 0;
  for (const auto& c : simple_coordinates(w)) h += c;
  return h;
}

namespace {

std::string format_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::string out;
  for (const auto& [c, sym] : terms) {
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (neg) out += '-';
    else if (!out.empty()) out += '+';
    if (a != 1) {
      out += to_string(a);
      if (!is_integer(a)) out += '*';
    }
    out += sym;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string AlgebraData::label(const Weight& w) const {
  if (case_.family == Family::F31 && w[0] != 0) {
    bool tuple = true;
    for (std::size_t i = 0; i < 4; ++i)
      if (w[i] != Rational(1, 2) && w[i] != Rational(-1, 2)) tuple = false;
    if (tuple) {
      std::string s;
      for (std::size_t i = 0; i < 4; ++i) s += w[i] > 0 ? '+' : '-';
      return s;
    }
  }
  std::vector<std::pair<Rational, std::string>> terms;
  if (case_.family == Family::G3) {
    // Re-introduce e3 = -e1-e2 when that shortens the expression.
    terms.emplace_back(w[0], "d");
    std::vector<Rational> best{w[1], w[2], Rational(0)};
    auto nonzeros = [](const std::vector<Rational>& v) {
      return std::count_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    };
    for (const Rational& t : {Rational(-w[1]), Rational(-w[2])}) {
      std::vector<Rational> cand{w[1] + t, w[2] + t, t};
      if (nonzeros(cand) < nonzeros(best)) best = cand;
    }
    terms.emplace_back(best[0], "e1");
    terms.emplace_back(best[1], "e2");
    terms.emplace_back(best[2], "e3");
    return format_terms(terms);
  }
  for (std::size_t i = 0; i < dim(); ++i) terms.emplace_back(w[i], labels_[i]);
  return format_terms(terms);
}

Weight AlgebraData::parse_label(std::string_view text) const {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::Parse, "cannot parse weight label '" + std::string(text) + "': " + why);
  };
  if (case_.family == Family::F31 && text.size() == 4 &&
      std::all_of(text.begin(), text.end(), [](char c) { return c == '+' || c == '-'; })) {
    Weight w(4);
    for (std::size_t i = 0; i < 4; ++i) w[i] = Rational(text[i] == '+' ? 1 : -1, 2);
    return w;
  }
  Weight w(dim());
  std::size_t pos = 0;
  if (text.empty()) fail("empty");
  if (text == "0") return w;
  while (pos < text.size()) {
    Rational sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
    }
    std::size_t num_start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    Rational coeff = 1;
    if (pos > num_start) coeff = parse_rational(text.substr(num_start, pos - num_start));
    if (pos < text.size() && text[pos] == '*') ++pos;
    if (pos >= text.size() || (text[pos] != 'd' && text[pos] != 'e')) fail("expected d or e");
    char sym = text[pos++];
    std::size_t idx_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string name(1, sym);
    name += text.substr(idx_start, pos - idx_start);
    Weight term(dim());
    if (case_.family == Family::G3 && name == "e3") {
      term[1] = -1;
      term[2] = -1;
    } else {
      auto it = std::find(labels_.begin(), labels_.end(), name);
      if (it == labels_.end()) fail("unknown symbol " + name);
      term[static_cast<std::size_t>(it - labels_.begin())] = 1;
    }
    w += (sign * coeff) * term;
  }
  return w;
}

RootDatum AlgebraData::parse_root(std::string_view text) const {
  auto r = find_root(parse_label(text));
  if (!r) throw Error(ErrorKind::Parse, "'" + std::string(text) + "' is not a root of " + to_string(case_));
  return *r;
}

AlgebraData build_algebra_data(const CaseId& c) {
  validate(c);
  AlgebraData a;
  a.case_ = c;
  const int m = c.m, n = c.n;
  std::vector<Weight> even, odd, simple;
  Weight gamma;

  auto zero = [&] { return Weight(a.labels_.size()); };
  auto d = [&](int i) {  // delta_i, 1-based
    Weight w = zero();
    w[static_cast<std::size_t>(i - 1)] = 1;
    return w;
  };
  auto e = [&](int j) {  // epsilon_j, 1-based
    Weight w = zero();
    w[static_cast<std::size_t>(m + j - 1)] = 1;
    return w;
  };
  const Rational half(1, 2);

  switch (c.family) {
    case Family::BI:
    case Family::BII:
    case Family::DI:
    case Family::DII: {
      const bool type_b = c.family == Family::BI || c.family == Family::BII;
      for (int i = 1; i <= m; ++i) a.labels_.push_back("d" + std::to_string(i));
      for (int j = 1; j <= n; ++j) a.labels_.push_back("e" + std::to_string(j));
      const std::size_t dim = static_cast<std::size_t>(m + n);
      a.form_.assign(dim, std::vector<Rational>(dim, Rational(0)));
      for (int i = 0; i < m; ++i) a.form_[i][i] = 1;
      for (int j = 0; j < n; ++j) a.form_[m + j][m + j] = -1;

      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
          even.push_back(d(i) + d(j));
          even.push_back(d(i) - d(j));
        }
      for (int p = 1; p <= m; ++p) even.push_back(Rational(2) * d(p));
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          even.push_back(e(k) + e(l));
          even.push_back(e(k) - e(l));
        }
      if (type_b)
        for (int q = 1; q <= n; ++q) even.push_back(e(q));
      if (type_b)
        for (int p = 1; p <= m; ++p) odd.push_back(d(p));
      const bool delta_first = c.family == Family::BI || c.family == Family::DI;
      for (int p = 1; p <= m; ++p)
        for (int q = 1; q <= n; ++q) {
          if (delta_first) {
            odd.push_back(d(p) + e(q));
            odd.push_back(d(p) - e(q));
          } else {
            odd.push_back(e(q) + d(p));
            odd.push_back(e(q) - d(p));
          }
        }

      Weight rho = zero();
      switch (c.family) {
        case Family::BI:
          for (int i = 1; i < m; ++i) simple.push_back(d(i) - d(i + 1));
          simple.push_back(d(m) - e(1));
          for (int j = 1; j < n; ++j) simple.push_back(e(j) - e(j + 1));
          simple.push_back(e(n));
          gamma = d(m);
          for (int i = 1; i <= m; ++i) rho[i - 1] = Rational(m - n - i) + half;
          for (int j = 1; j <= n; ++j) rho[m + j - 1] = Rational(n - j) + half;
          break;
        case Family::BII:
          for (int j = 1; j < n; ++j) simple.push_back(e(j) - e(j + 1));
          simple.push_back(e(n) - d(1));
          for (int i = 1; i < m; ++i) simple.push_back(d(i) - d(i + 1));
          simple.push_back(d(m));
          gamma = e(n);
          for (int i = 1; i <= m; ++i) rho[i - 1] = Rational(m - i) + half;
          for (int j = 1; j <= n; ++j) rho[m + j - 1] = Rational(n - m - j) + half;
          break;
        case Family::DI:
          for (int i = 1; i < m; ++i) simple.push_back(d(i) - d(i + 1));
          simple.push_back(d(m) - e(1));
          for (int j = 1; j < n; ++j) simple.push_back(e(j) - e(j + 1));
          simple.push_back(e(n - 1) + e(n));
          gamma = Rational(2) * d(m);
          for (int i = 1; i <= m; ++i) rho[i - 1] = Rational(m - n - i + 1);
          for (int j = 1; j <= n; ++j) rho[m + j - 1] = Rational(n - j);
          break;
        default:
          for (int j = 1; j < n; ++j) simple.push_back(e(j) - e(j + 1));
          simple.push_back(e(n) - d(1));
          for (int i = 1; i < m; ++i) simple.push_back(d(i) - d(i + 1));
          simple.push_back(Rational(2) * d(m));
          gamma = e(n - 1) + e(n);
          for (int i = 1; i <= m; ++i) rho[i - 1] = Rational(m - i + 1);
          for (int j = 1; j <= n; ++j) rho[m + j - 1] = Rational(n - m - j);
          break;
      }
      a.rho_closed_ = rho;
      break;
    }
    case Family::F31: {
      a.labels_ = {"d", "e1", "e2", "e3"};
      a.form_.assign(4, std::vector<Rational>(4, Rational(0)));
      a.form_[0][0] = -3;
      for (int i = 1; i < 4; ++i) a.form_[i][i] = 1;
      auto eps = [&](int i) {
        Weight w = zero();
        w[static_cast<std::size_t>(i)] = 1;
        return w;
      };
      Weight delta = zero();
      delta[0] = 1;
      even.push_back(delta);
      for (int i = 1; i <= 3; ++i) even.push_back(eps(i));
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
          even.push_back(eps(i) + eps(j));
          even.push_back(eps(i) - eps(j));
        }
      for (int s = 0; s < 8; ++s) {
        Weight w = zero();
        w[0] = half;
        for (int i = 0; i < 3; ++i) w[static_cast<std::size_t>(i + 1)] = (s >> (2 - i)) & 1 ? -half : half;
        odd.push_back(w);
      }
      simple = {eps(1) - eps(2), eps(2) - eps(3), eps(3), half * (delta - eps(1) - eps(2) - eps(3))};
      gamma = delta;
      a.rho_closed_ = Weight({Rational(-3, 2), Rational(5, 2), Rational(3, 2), Rational(1, 2)});
      break;
    }
    case Family::G3: {
      a.labels_ = {"d", "e1", "e2"};
      a.form_ = {{Rational(-2), Rational(0), Rational(0)},
                 {Rational(0), Rational(2), Rational(-1)},
                 {Rational(0), Rational(-1), Rational(2)}};
      Weight delta({Rational(1), Rational(0), Rational(0)});
      Weight e1({Rational(0), Rational(1), Rational(0)});
      Weight e2({Rational(0), Rational(0), Rational(1)});
      Weight e3 = -(e1 + e2);
      even = {Rational(2) * delta, e1, e2, -e3, e2 - e1, e1 - e3, e2 - e3};
      odd = {delta, delta + e1, delta - e1, delta + e2, delta - e2, delta + e3, delta - e3};
      simple = {e2 - e1, e1, delta + e3};
      gamma = delta;
      a.rho_closed_ = Weight({Rational(-5, 2), Rational(2), Rational(3)});
      break;
    }
  }

  auto desc = [](const Weight& x, const Weight& y) { return y < x; };
  std::sort(even.begin(), even.end(), desc);
  std::sort(odd.begin(), odd.end(), desc);
  for (const auto& w : even) {
    RootDatum r{w, Parity::Even, true, static_cast<int>(a.positive_.size())};
    a.index_.emplace(w, r.index);
    a.positive_.push_back(r);
  }
  for (const auto& w : odd) {
    RootDatum r{w, a.form(w, w) == 0 ? Parity::OddIsotropic : Parity::OddNonisotropic, true,
                static_cast<int>(a.positive_.size())};
    a.index_.emplace(w, r.index);
    a.positive_.push_back(r);
  }

  Weight rho = zero();
  for (const auto& r : a.positive_) rho += (r.odd() ? -half : half) * r.weight;
  a.rho_ = rho;

  for (std::size_t i = 0; i < simple.size(); ++i) {
    auto r = a.find_root(simple[i]);
    if (!r || !r->positive) throw Error(ErrorKind::ClosureFailure, "simple root is not a positive root");
    if (r->parity == Parity::OddIsotropic) a.isotropic_simple_ = static_cast<int>(i);
    a.simple_.push_back(*r);
  }
  a.gamma_ = *a.find_root(gamma);

  RationalMatrix basis(a.dim(), std::vector<Rational>(a.dim(), Rational(0)));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) basis[j][i] = simple[i][j];
  if (simple.size() != a.dim() || !invert(basis, a.simple_inverse_))
    throw Error(ErrorKind::ClosureFailure, "simple roots do not form a basis of h*");
  return a;
}

Rational bilinear_form(const Weight& a, const Weight& b, const AlgebraData& alg) { return alg.form(a, b); }

Rational coroot_pairing(const Weight& lambda, const Weight& beta, const AlgebraData& alg) {
  Rational bb = alg.form(beta, beta);
  if (bb == 0) throw Error(ErrorKind::IsotropicCoroot, alg.label(beta) + " is isotropic");
  return Rational(2) * alg.form(lambda, beta) / bb;
}

Rational coroot_pairing(const Weight& lambda, const RootDatum& beta, const AlgebraData& alg) {
  return coroot_pairing(lambda, beta.weight, alg);
}

Weight reflect(const Weight& lambda, const Weight& beta, const AlgebraData& alg) {
  return lambda - coroot_pairing(lambda, beta, alg) * beta;
}

Weight reflect(const Weight& lambda, const RootDatum& beta, const AlgebraData& alg) {
  return reflect(lambda, beta.weight, alg);
}

std::vector<RootDatum> wprime_orbit(const RootDatum& beta, const AlgebraData& alg) {
  std::vector<Weight> mirrors;
  for (const auto& s : alg.simple_roots())
    if (s.parity != Parity::OddIsotropic) mirrors.push_back(s.weight);
  std::set<Weight> seen{beta.weight};
  std::deque<Weight> queue{beta.weight};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (const auto& s : mirrors) {
      Weight r = reflect(w, s, alg);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  std::set<int> indices;
  for (const auto& w : seen)
    if (auto r = alg.find_root(w)) indices.insert(r->index);
  std::vector<RootDatum> out;
  for (int i : indices) out.push_back(alg.positive_root(i));
  return out;
}

}  // namespace singvec
