#include "rotinv/bases.hpp"

#include <algorithm>
#include <set>

#include "rotinv/error.hpp"

namespace rotinv {

namespace {

void require_dimension(int n) {
  if (n < 2) throw DimensionError("basis constructors need n >= 2, got " + std::to_string(n));
}

std::vector<SlotRef> repeat(const SlotRef& s, int count) {
  return std::vector<SlotRef>(static_cast<std::size_t>(std::max(count, 0)), s);
}

std::vector<SlotRef> concat(std::vector<SlotRef> a, const std::vector<SlotRef>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// The shared scheme: S_a over each tensor, S_ab over the pair (b < a), R_a
// against t1 only, then inner products of the vectors.
std::vector<InvariantExpr> trace_sandwich_scheme(int n, const SlotRef& u1, const SlotRef& u2,
                                                 const SlotRef& t1, const SlotRef& t2) {
  std::vector<InvariantExpr> out;
  for (const SlotRef* t : {&t1, &t2}) {
    for (int a = 1; a <= n; ++a) out.push_back(InvariantExpr::trace(repeat(*t, a)));
  }
  for (int a = 2; a <= n; ++a) {
    for (int b = 1; b < a; ++b) {
      out.push_back(InvariantExpr::trace(concat(repeat(t1, b), repeat(t2, a - b))));
    }
  }
  for (const SlotRef* u : {&u1, &u2}) {
    for (int a = 1; a <= n; ++a) out.push_back(InvariantExpr::sandwich(*u, repeat(t1, a - 1), *u));
  }
  out.push_back(InvariantExpr::sandwich(u1, {}, u1));
  out.push_back(InvariantExpr::sandwich(u1, {}, u2));
  out.push_back(InvariantExpr::sandwich(u2, {}, u2));
  return out;
}

// Smallest rotation of the word or of its reverse. Valid as a trace key when
// every letter is G-symmetric.
std::vector<int> bracelet_key(const std::vector<int>& word) {
  std::vector<int> best = word;
  std::vector<int> w = word;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::rotate(w.begin(), w.begin() + 1, w.end());
      best = std::min(best, w);
    }
    std::reverse(w.begin(), w.end());
  }
  return best;
}

}  // namespace

std::vector<InvariantExpr> theorem1_basis(int n, const VectorTensorNames& names) {
  require_dimension(n);
  return trace_sandwich_scheme(n, SlotRef::vector(names.u1), SlotRef::vector(names.u2),
                               SlotRef::tensor(names.t1), SlotRef::tensor(names.t2));
}

std::vector<InvariantExpr> theorem2_basis(int n, const VectorTensorNames& names) {
  require_dimension(n);
  const SlotRef u1 = SlotRef::vector(names.u1);
  const SlotRef u2 = SlotRef::vector(names.u2);
  auto out = trace_sandwich_scheme(n, u1, u2, SlotRef::squared(names.t1), SlotRef::squared(names.t2));
  // u . Y . u vanishes identically; only the cross pair survives.
  out.push_back(InvariantExpr::sandwich(u1, {SlotRef::tensor(names.t1)}, u2));
  out.push_back(InvariantExpr::sandwich(u1, {SlotRef::tensor(names.t2)}, u2));
  return out;
}

std::vector<InvariantExpr> theorem3_basis(int n, const MixedNames& names) {
  require_dimension(n);
  const SlotRef u1 = SlotRef::vector(names.u1);
  const SlotRef u2 = SlotRef::vector(names.u2);
  const std::vector<SlotRef> family = {SlotRef::tensor(names.w1), SlotRef::tensor(names.w2),
                                       SlotRef::squared(names.y1), SlotRef::squared(names.y2)};
  const int letters = static_cast<int>(family.size());

  std::vector<InvariantExpr> out;
  std::set<std::vector<int>> seen_words;
  auto emit_word = [&](const std::vector<int>& word) {
    if (!seen_words.insert(bracelet_key(word)).second) return;
    std::vector<SlotRef> factors;
    for (int l : word) factors.push_back(family[static_cast<std::size_t>(l)]);
    out.push_back(InvariantExpr::trace(std::move(factors)));
  };

  // Single-tensor words, then the two-tensor S_ab blocks, then everything else.
  for (int l = 0; l < letters; ++l) {
    for (int a = 1; a <= n; ++a) emit_word(std::vector<int>(static_cast<std::size_t>(a), l));
  }
  for (int p = 0; p < letters; ++p) {
    for (int q = p + 1; q < letters; ++q) {
      for (int a = 2; a <= n; ++a) {
        for (int b = 1; b < a; ++b) {
          std::vector<int> word(static_cast<std::size_t>(b), p);
          word.insert(word.end(), static_cast<std::size_t>(a - b), q);
          emit_word(word);
        }
      }
    }
  }
  for (int len = 2; len <= n; ++len) {
    std::vector<int> word(static_cast<std::size_t>(len), 0);
    for (;;) {
      emit_word(word);
      int i = len - 1;
      while (i >= 0 && word[static_cast<std::size_t>(i)] == letters - 1) {
        word[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++word[static_cast<std::size_t>(i)];
    }
  }

  for (const SlotRef* u : {&u1, &u2}) {
    out.push_back(InvariantExpr::sandwich(*u, {}, *u));
    for (const auto& f : family) {
      for (int a = 2; a <= n; ++a) out.push_back(InvariantExpr::sandwich(*u, repeat(f, a - 1), *u));
    }
  }
  out.push_back(InvariantExpr::sandwich(u1, {}, u2));
  out.push_back(InvariantExpr::sandwich(u1, {SlotRef::tensor(names.y1)}, u2));
  out.push_back(InvariantExpr::sandwich(u1, {SlotRef::tensor(names.y2)}, u2));
  for (const auto& f : family) out.push_back(InvariantExpr::sandwich(u1, {f}, u2));
  return out;
}

std::vector<InvariantExpr> poincare_vector_potential_basis() {
  const SlotRef a = SlotRef::vector("A");
  const SlotRef b = SlotRef::tensor("B");
  const SlotRef l = SlotRef::tensor("L");
  return {
      InvariantExpr::sandwich(a, {}, a),
      InvariantExpr::sandwich(a, {b}, a),
      InvariantExpr::sandwich(a, {b, b}, a),
      InvariantExpr::sandwich(a, {b, l}, a),
      InvariantExpr::sandwich(a, {l, l}, a),
      InvariantExpr::trace({b}),
      InvariantExpr::trace({b, b}),
      InvariantExpr::trace({b, b, b}),
      InvariantExpr::trace({b, b, b, b}),
      InvariantExpr::trace({l, l}),
      InvariantExpr::trace({l, l, l, l}),
      InvariantExpr::trace({l, l, b}),
      InvariantExpr::trace({l, b, b, l}),
      InvariantExpr::trace({l, b, l, b}),
  };
}

Theorem parse_theorem(std::string_view text) {
  if (text == "1") return Theorem::One;
  if (text == "2") return Theorem::Two;
  if (text == "3") return Theorem::Three;
  if (text == "poincare") return Theorem::Poincare;
  throw ParseError("theorem must be one of 1, 2, 3, poincare; got '" + std::string(text) + "'");
}

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::One:
      return "1";
    case Theorem::Two:
      return "2";
    case Theorem::Three:
      return "3";
    case Theorem::Poincare:
      return "poincare";
  }
  return "1";
}

CandidateBasis candidate_basis(Theorem t, int n, const MetricSignature& metric) {
  CandidateBasis c;
  switch (t) {
    case Theorem::One:
      c.label = "theorem 1: two vectors, two symmetric tensors";
      c.spec = SystemSpec::make(n, metric, 2, 2, 0);
      c.exprs = theorem1_basis(n);
      c.notes = {
          "normalization: S_ab emitted for b < a only; b = a repeats S_a",
          "normalization: cross product u1 . u2 emitted in addition to u^r . u^r",
          "R_a emitted against W1 only",
      };
      break;
    case Theorem::Two:
      c.label = "theorem 2: two vectors, two antisymmetric tensors";
      c.spec = SystemSpec::make(n, metric, 2, 0, 2);
      c.exprs = theorem2_basis(n);
      c.notes = {
          "normalization: S_ab emitted for b < a only; b = a repeats S_a",
          "squared slots sq(Y) = Y G Y stand for the contraction y_ij y_jk",
          "R_a emitted against sq(Y1) only; mixed sandwiches u1 . Y^s . u2 added",
      };
      break;
    case Theorem::Three:
      c.label = "theorem 3: constructed per squared-tensor device";
      c.spec = SystemSpec::make(n, metric, 2, 2, 2);
      c.exprs = theorem3_basis(n);
      c.notes = {
          "constructed per squared-tensor device (sq(Y1), sq(Y2) treated as extra symmetric "
          "tensors), not the verbatim theorem-3 list; candidate set is intentionally overcomplete",
      };
      break;
    case Theorem::Poincare:
      c.label = "vector potential: first-order invariants in Minkowski space";
      c.spec = vector_potential_spec();
      c.exprs = poincare_vector_potential_basis();
      c.notes = {"tr(L^2) equals minus the full contraction L_mu_nu L^mu^nu"};
      break;
  }
  return c;
}

std::vector<InvariantExpr> restrict_to(const std::vector<InvariantExpr>& exprs,
                                       const Layout& layout) {
  std::vector<InvariantExpr> out;
  for (const auto& e : exprs) {
    if (resolves_in(e, layout)) out.push_back(e);
  }
  return out;
}

}  // namespace rotinv
