#include "steinberg/leavitt.hpp"

#include <cctype>

namespace steinberg {

LpaTerm make_term(const Path& alpha, const Path& beta) {
  if (alpha.target != beta.target) throw GraphError("alpha and beta must have the same range");
  return {alpha, beta};
}

bool is_normal(const Graph& g, const LpaTerm& t) {
  if (t.alpha.edges.empty() || t.beta.edges.empty()) return true;
  const EdgeId a = t.alpha.edges.back(), b = t.beta.edges.back();
  return a != b || a != g.special_edge(g.src(a));
}

std::vector<std::pair<LpaTerm, std::int64_t>> rewrite_once(const Graph& g, const LpaTerm& t) {
  if (is_normal(g, t)) throw GraphError("monomial is already normal");
  const EdgeId special = t.alpha.edges.back();
  const VertexId v = g.src(special);
  LpaTerm shorter = t;
  shorter.alpha.edges.pop_back();
  shorter.beta.edges.pop_back();
  shorter.alpha.target = shorter.beta.target = v;

  std::vector<std::pair<LpaTerm, std::int64_t>> out{{shorter, 1}};
  for (EdgeId e : g.out_edges(v))
    if (e != special) out.push_back({{shorter.alpha.extended(g, e), shorter.beta.extended(g, e)}, -1});
  return out;
}

std::map<LpaTerm, std::int64_t> reduce_term(const Graph& g, const LpaTerm& t) {
  std::map<LpaTerm, std::int64_t> out;
  LpaTerm current = t;
  // Only the shortened monomial can fail to be normal, so the rewriting is a
  // single chain.
  while (!is_normal(g, current)) {
    auto step = rewrite_once(g, current);
    for (std::size_t i = 1; i < step.size(); ++i) out[step[i].first] += step[i].second;
    current = step[0].first;
  }
  out[current] += 1;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::optional<LpaTerm> multiply_terms(const LpaTerm& x, const LpaTerm& y) {
  if (auto eps = x.beta.remainder_in(y.alpha)) return LpaTerm{x.alpha.concat(*eps), y.beta};
  if (auto eps = y.alpha.remainder_in(x.beta)) return LpaTerm{x.alpha, y.beta.concat(*eps)};
  return std::nullopt;
}

std::string format_term(const Graph& g, const LpaTerm& t) {
  if (t.alpha.edges.empty() && t.beta.edges.empty()) return g.vertex_name(t.alpha.source);
  std::string out;
  for (EdgeId e : t.alpha.edges) out += g.edge_name(e);
  for (auto it = t.beta.edges.rbegin(); it != t.beta.edges.rend(); ++it) out += g.edge_name(*it) + "*";
  return out;
}

std::vector<LpaTerm> normal_monomials(const Graph& g) {
  const auto paths = all_paths(g);
  std::vector<LpaTerm> out;
  for (const auto& a : paths)
    for (const auto& b : paths)
      if (a.target == b.target && is_normal(g, {a, b})) out.push_back({a, b});
  std::sort(out.begin(), out.end());
  return out;
}

std::array<RelationStatus, 5> check_relations(const GraphPtr& graph) {
  using X = LpaElement<Integer>;
  const Graph& g = *graph;
  std::array<RelationStatus, 5> r;
  const char* names[] = {"V", "E1", "E2", "CK1", "CK2"};
  for (std::size_t i = 0; i < r.size(); ++i) r[i].name = names[i];
  auto expect = [&](std::size_t i, const X& lhs, const X& rhs, const std::string& what) {
    ++r[i].checked;
    if (lhs == rhs || !r[i].pass) return;
    r[i].pass = false;
    r[i].detail = what + ": got " + format_lpa(lhs) + ", expected " + format_lpa(rhs);
  };
  auto vx = [&](VertexId v) { return X::vertex(graph, v); };
  const X zero(graph);

  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId w = 0; w < g.vertex_count(); ++w)
      expect(0, vx(v) * vx(w), v == w ? vx(v) : zero, g.vertex_name(v) + " " + g.vertex_name(w));

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const X edge = X::edge(graph, e), ghost = X::ghost(graph, e);
    const std::string& n = g.edge_name(e);
    expect(1, vx(g.src(e)) * edge, edge, "s(" + n + ")" + n);
    expect(1, edge * vx(g.rng(e)), edge, n + "r(" + n + ")");
    expect(2, vx(g.rng(e)) * ghost, ghost, "r(" + n + ")" + n + "*");
    expect(2, ghost * vx(g.src(e)), ghost, n + "*s(" + n + ")");
    for (EdgeId f = 0; f < g.edge_count(); ++f)
      expect(3, ghost * X::edge(graph, f), e == f ? vx(g.rng(e)) : zero, n + "*" + g.edge_name(f));
  }

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v)) continue;
    X sum(graph);
    for (EdgeId e : g.out_edges(v)) sum += X::edge(graph, e) * X::ghost(graph, e);
    expect(4, sum, vx(v), "sum over s^-1(" + g.vertex_name(v) + ")");
  }
  return r;
}

namespace {

class LpaParser {
 public:
  LpaParser(const GraphPtr& graph, const std::string& text) : graph_(graph), g_(*graph), text_(text) {
    for (VertexId v = 0; v < g_.vertex_count(); ++v) names_.push_back(g_.vertex_name(v));
    for (EdgeId e = 0; e < g_.edge_count(); ++e) names_.push_back(g_.edge_name(e));
    // Longest identifiers first, so matching is greedy.
    std::sort(names_.begin(), names_.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
  }

  LpaElement<Rational> parse() {
    LpaElement<Rational> out(graph_);
    skip_space();
    bool negative = accept('-');
    if (!negative) accept('+');
    for (;;) {
      skip_space();
      LpaElement<Rational> t = term();
      out += negative ? Rational(-1) * t : t;
      skip_space();
      if (pos_ == text_.size()) break;
      if (accept('+'))
        negative = false;
      else if (accept('-'))
        negative = true;
      else
        fail("expected '+' or '-'");
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw GraphError(what + " at column " + std::to_string(pos_ + 1) + " of '" + text_ + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::optional<Rational> coefficient() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ > s;
    };
    if (!digits()) return std::nullopt;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      if (!digits()) fail("expected a denominator");
    }
    try {
      return parse_scalar<Rational>(std::string_view(text_).substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  std::optional<LpaElement<Rational>> generator() {
    for (const auto& name : names_) {
      if (text_.compare(pos_, name.size(), name) != 0) continue;
      pos_ += name.size();
      const bool ghost = accept('*');
      if (auto v = g_.find_vertex(name)) return LpaElement<Rational>::vertex(graph_, *v);
      const EdgeId e = *g_.find_edge(name);
      return ghost ? LpaElement<Rational>::ghost(graph_, e) : LpaElement<Rational>::edge(graph_, e);
    }
    return std::nullopt;
  }

  LpaElement<Rational> term() {
    const std::size_t start = pos_;
    std::optional<Rational> c;
    if (!generator_ahead()) {
      c = coefficient();
      if (!c) fail("expected a coefficient or generator");
      skip_space();
    }
    std::optional<LpaElement<Rational>> product;
    for (;;) {
      const std::size_t before = pos_;
      skip_space();
      auto gen = generator();
      if (!gen) {
        pos_ = before;
        break;
      }
      product = product ? *product * *gen : *gen;
    }
    if (!product && !c) {
      pos_ = start;
      fail("empty term");
    }
    LpaElement<Rational> x = product ? *product : LpaElement<Rational>::one(graph_);
    return c ? *c * x : x;
  }

  bool generator_ahead() const {
    return std::any_of(names_.begin(), names_.end(),
                       [&](const std::string& n) { return text_.compare(pos_, n.size(), n) == 0; });
  }

  GraphPtr graph_;
  const Graph& g_;
  std::string text_;
  std::vector<std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

LpaElement<Rational> parse_lpa(const GraphPtr& graph, const std::string& text) {
  return LpaParser(graph, text).parse();
}

}  // namespace steinberg
