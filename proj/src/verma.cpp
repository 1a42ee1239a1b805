#include "singvec/verma.hpp"

#include "singvec/error.hpp"

namespace singvec {

VermaModule::VermaModule(std::shared_ptr<PBWAlgebra> engine, Weight lambda)
    : engine_(std::move(engine)), lambda_(std::move(lambda)) {
  const auto& table = engine_->table();
  if (lambda_.size() != table.algebra().dim())
    throw Error(ErrorKind::InvalidParams, "highest weight has the wrong number of coordinates");
  top_ = lambda_ - table.algebra().rho();
  for (int k = 0; k < table.rank(); ++k) top_pairing_.push_back(table.evaluate(top_, k));
  memo_.resize(engine_->order().size());
}

VermaVector VermaModule::highest() const { return {engine_->one(), lambda_}; }

VermaVector VermaModule::make(UEAElement body) const {
  for (const auto& [m, c] : body.terms())
    for (auto p : m)
      if (!engine_->order().is_negative_position(p))
        throw Error(ErrorKind::WrongOrder, "Verma vector body must lie in U(n-)");
  return {std::move(body), lambda_};
}

void VermaModule::act_into(int pos, const Monomial& m, const Rational& c, UEAElement& out) {
  if (c == 0) return;
  const auto& order = engine_->order();
  if (order.is_negative_position(pos)) {
    engine_->lmul_into(pos, m, c, out);
    return;
  }
  const auto& element = engine_->table().element(order.basis_at(pos));
  if (element.kind == BasisKind::Cartan) {
    Rational s = top_pairing_[static_cast<std::size_t>(element.cartan)] +
                 engine_->table().evaluate(engine_->weight(m), element.cartan);
    out.add(m, c * s);
    return;
  }
  out.add(act_positive(pos, m), c);
}

const UEAElement& VermaModule::act_positive(int pos, const Monomial& m) {
  auto& memo = memo_[static_cast<std::size_t>(pos)];
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  UEAElement out;
  if (!m.empty()) {
    // x y rest = ±y (x rest) + [x, y] rest
    const int y = m.front();
    const Monomial rest(m.begin() + 1, m.end());
    const auto& table = engine_->table();
    const auto& order = engine_->order();
    const int xid = order.basis_at(pos);
    const int yid = order.basis_at(y);
    const Rational sign = (table.odd(xid) && table.odd(yid)) ? -1 : 1;
    const UEAElement& xr = act_positive(pos, rest);
    for (const auto& [mm, c] : xr.terms()) engine_->lmul_into(y, mm, sign * c, out);
    for (const auto& t : table.bracket(xid, yid)) act_into(order.position(t.index), rest, t.coeff, out);
  }
  return memo.emplace(m, std::move(out)).first->second;
}

VermaVector VermaModule::act(int basis_id, const VermaVector& v) {
  if (v.lambda != lambda_) throw Error(ErrorKind::InvalidParams, "vector belongs to a different Verma module");
  const int pos = engine_->order().position(basis_id);
  UEAElement out;
  for (const auto& [m, c] : v.body.terms()) act_into(pos, m, c, out);
  return {std::move(out), lambda_};
}

VermaVector VermaModule::act(const UEAElement& x, const VermaVector& v) {
  UEAElement total;
  for (const auto& [m, c] : x.terms()) {
    VermaVector cur = v;
    for (auto it = m.rbegin(); it != m.rend(); ++it) cur = act(engine_->order().basis_at(*it), cur);
    total.add(cur.body, c);
  }
  return {std::move(total), lambda_};
}

VermaVector VermaModule::act_word(const std::vector<int>& basis_ids, const VermaVector& v) {
  VermaVector cur = v;
  for (auto it = basis_ids.rbegin(); it != basis_ids.rend(); ++it) cur = act(*it, cur);
  return cur;
}

Weight VermaModule::weight_of(const VermaVector& v) const { return top_ + engine_->weight(v.body); }

SingularityReport VermaModule::is_singular(const VermaVector& v, bool all_positive) {
  SingularityReport rep;
  rep.nonzero = !v.is_zero();
  rep.singular = rep.nonzero;
  const auto& table = engine_->table();
  const auto& alg = table.algebra();
  std::vector<Weight> roots;
  if (all_positive) {
    for (const auto& r : alg.positive_roots()) roots.push_back(r.weight);
  } else {
    for (const auto& r : alg.simple_roots()) roots.push_back(r.weight);
  }
  for (const auto& w : roots) {
    VermaVector r = act(*table.root_vector(w), v);
    ResidualEntry e{alg.label(w), r.body.size(), {}};
    if (!r.is_zero()) {
      e.residual = render(r);
      rep.singular = false;
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace singvec
