#include "gjms/multipoly.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gjms {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "C", "B", "Q", "Delta", "lambda", "mu"};

int degree_of(const MultiPoly::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

std::vector<Var> union_vars(const std::vector<Var>& a, const std::vector<Var>& b) {
  std::vector<Var> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (size_t i = 0; i < kVarNames.size(); ++i) {
    if (kVarNames[i] == name) return static_cast<Var>(i);
  }
  return std::nullopt;
}

bool MultiPoly::GradedLexDown::operator()(const Exponents& a, const Exponents& b) const {
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic, first (most significant) variable dominates
}

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

MultiPoly MultiPoly::variable(Var v) {
  MultiPoly p;
  p.vars_ = {v};
  p.terms_.emplace(Exponents{1}, Rational(1));
  return p;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return degree_of(terms_.begin()->first);  // map is sorted degree-first
}

MultiPoly MultiPoly::homogeneous_part(int degree) const {
  MultiPoly out;
  out.vars_ = vars_;
  for (const auto& [key, coef] : terms_) {
    if (degree_of(key) == degree) out.terms_.emplace(key, coef);
  }
  return out;
}

bool MultiPoly::has_only_even_powers(Var v) const {
  const auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return true;
  const size_t idx = static_cast<size_t>(it - vars_.begin());
  for (const auto& [key, coef] : terms_) {
    if (key[idx] % 2 != 0) return false;
  }
  return true;
}

void MultiPoly::insert_term(Exponents key, Rational coef) {
  if (coef.is_zero()) return;
  const auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::move(coef));
  } else {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::embedded(const std::vector<Var>& superset) const {
  if (superset == vars_) return *this;
  std::vector<size_t> where(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    const auto it = std::find(superset.begin(), superset.end(), vars_[i]);
    if (it == superset.end())
      throw std::logic_error("MultiPoly::embedded: target is not a superset");
    where[i] = static_cast<size_t>(it - superset.begin());
  }
  MultiPoly out;
  out.vars_ = superset;
  for (const auto& [key, coef] : terms_) {
    Exponents k(superset.size(), 0);
    for (size_t i = 0; i < key.size(); ++i) k[where[i]] = key[i];
    out.terms_.emplace(std::move(k), coef);
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  out.vars_ = vars_;
  for (const auto& [key, coef] : terms_) out.terms_.emplace(key, -coef);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (this == &o) {
    const MultiPoly copy = o;
    return *this += copy;
  }
  if (vars_ == o.vars_) {
    for (const auto& [key, coef] : o.terms_) insert_term(key, coef);
    return *this;
  }
  const auto u = union_vars(vars_, o.vars_);
  MultiPoly lhs = embedded(u);
  const MultiPoly rhs = o.embedded(u);
  for (const auto& [key, coef] : rhs.terms_) lhs.insert_term(key, coef);
  *this = std::move(lhs);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  const auto u = union_vars(vars_, o.vars_);
  const MultiPoly lhs = embedded(u);
  const MultiPoly rhs = o.embedded(u);
  MultiPoly out;
  out.vars_ = u;
  for (const auto& [ka, ca] : lhs.terms_) {
    for (const auto& [kb, cb] : rhs.terms_) {
      Exponents k(u.size());
      for (size_t i = 0; i < u.size(); ++i) k[i] = ka[i] + kb[i];
      out.insert_term(std::move(k), ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return (a - b).is_zero();
}

MultiPoly pow(const MultiPoly& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("pow(MultiPoly): negative exponent");
  MultiPoly acc(Rational(1));
  MultiPoly sq = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) acc *= sq;
    e >>= 1;
    if (e > 0) sq *= sq;
  }
  return acc;
}

MultiPoly factor_chain(const MultiPoly& base, const Rational& start, int step, int count) {
  if (step != 2 && step != -2)
    throw std::invalid_argument("factor_chain: step must be +2 or -2");
  if (count < 0) throw std::invalid_argument("factor_chain: negative count");
  MultiPoly prod{Rational(1)};
  Rational offset = start;
  for (int i = 0; i < count; ++i) {
    prod *= base + offset;
    offset += Rational(step);
  }
  return prod;
}

MultiPoly MultiPoly::substituted(Var v, const MultiPoly& replacement) const {
  const auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end())
    throw std::invalid_argument(std::string("MultiPoly: variable ") +
                                std::string(var_name(v)) + " is not declared");
  const size_t idx = static_cast<size_t>(it - vars_.begin());

  std::vector<Var> rest = vars_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));

  // Group terms by the power of v, then reassemble with replacement powers.
  std::map<int, MultiPoly> by_power;
  for (const auto& [key, coef] : terms_) {
    Exponents k(key);
    const int e = k[idx];
    k.erase(k.begin() + static_cast<std::ptrdiff_t>(idx));
    auto [slot, created] = by_power.try_emplace(e);
    if (created) slot->second.vars_ = rest;
    slot->second.insert_term(std::move(k), coef);
  }

  MultiPoly out;
  out.vars_ = rest;
  MultiPoly repl_pow{Rational(1)};
  int cur = 0;
  for (auto& [e, part] : by_power) {
    while (cur < e) {
      repl_pow *= replacement;
      ++cur;
    }
    out += part * repl_pow;
  }
  return out;
}

MultiPoly MultiPoly::shifted(Var v, const Rational& offset) const {
  MultiPoly out = substituted(v, variable(v) + offset);
  return out.embedded(union_vars(vars_, out.vars_));
}

MultiPoly MultiPoly::squares_rewritten(Var v, const MultiPoly& replacement) const {
  const auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end())
    throw std::invalid_argument(std::string("MultiPoly: variable ") +
                                std::string(var_name(v)) + " is not declared");
  const size_t idx = static_cast<size_t>(it - vars_.begin());
  for (const auto& [key, coef] : terms_) {
    if (key[idx] % 2 != 0)
      throw std::invalid_argument("MultiPoly::squares_rewritten: odd power of " +
                                  std::string(var_name(v)));
  }
  // Halve every power of v, then substitute v -> replacement.
  MultiPoly halved;
  halved.vars_ = vars_;
  for (const auto& [key, coef] : terms_) {
    Exponents k(key);
    k[idx] /= 2;
    halved.terms_.emplace(std::move(k), coef);
  }
  return halved.substituted(v, replacement);
}

Rational MultiPoly::evaluate(const std::map<Var, Rational>& assignment) const {
  std::vector<std::vector<Rational>> powers(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    const auto it = assignment.find(vars_[i]);
    if (it == assignment.end())
      throw std::invalid_argument(std::string("MultiPoly::evaluate: missing variable ") +
                                  std::string(var_name(vars_[i])));
    int max_e = 0;
    for (const auto& [key, coef] : terms_) max_e = std::max(max_e, key[i]);
    auto& table = powers[i];
    table.reserve(static_cast<size_t>(max_e) + 1);
    table.emplace_back(1);
    for (int e = 1; e <= max_e; ++e) table.push_back(table.back() * it->second);
  }
  Rational sum(0);
  for (const auto& [key, coef] : terms_) {
    Rational term = coef;
    for (size_t i = 0; i < vars_.size(); ++i) term *= powers[i][static_cast<size_t>(key[i])];
    sum += term;
  }
  return sum;
}

std::string MultiPoly::term_str(const Exponents& key, const Rational& coef) const {
  std::string vars;
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (key[i] == 0) continue;
    if (!vars.empty()) vars += ' ';
    vars += var_name(vars_[i]);
    vars += '^';
    vars += std::to_string(key[i]);
  }
  if (vars.empty()) return coef.str();
  return coef.str() + " * " + vars;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, coef] : terms_) {
    if (!out.empty()) out += " + ";
    out += term_str(key, coef);
  }
  return out;
}

std::optional<std::string> MultiPoly::leading_term_str() const {
  if (terms_.empty()) return std::nullopt;
  const auto& [key, coef] = *terms_.begin();
  return term_str(key, coef);
}

MultiPoly MultiPoly::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("MultiPoly::parse: empty input");
  if (text == "0") return MultiPoly{};

  MultiPoly result;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find(" + ", pos);
    std::string_view chunk = (next == std::string_view::npos)
                                 ? text.substr(pos)
                                 : text.substr(pos, next - pos);
    chunk = trim(chunk);
    if (chunk.empty()) throw std::invalid_argument("MultiPoly::parse: empty term");

    // Tokenize on spaces, dropping the '*' separators.
    std::vector<std::string_view> tokens;
    size_t t = 0;
    while (t < chunk.size()) {
      while (t < chunk.size() && chunk[t] == ' ') ++t;
      size_t end = t;
      while (end < chunk.size() && chunk[end] != ' ') ++end;
      if (end > t) {
        std::string_view tok = chunk.substr(t, end - t);
        if (tok != "*") tokens.push_back(tok);
      }
      t = end;
    }
    if (tokens.empty()) throw std::invalid_argument("MultiPoly::parse: empty term");

    size_t first_var = 0;
    Rational coef(1);
    const char c0 = tokens[0].front();
    if (c0 == '-' || (c0 >= '0' && c0 <= '9')) {
      coef = Rational::parse(tokens[0]);
      first_var = 1;
    }
    MultiPoly term{coef};
    for (size_t i = first_var; i < tokens.size(); ++i) {
      std::string_view tok = tokens[i];
      int exponent = 1;
      const auto caret = tok.find('^');
      if (caret != std::string_view::npos) {
        const std::string estr(tok.substr(caret + 1));
        try {
          exponent = std::stoi(estr);
        } catch (const std::exception&) {
          throw std::invalid_argument("MultiPoly::parse: bad exponent '" + estr + "'");
        }
        if (exponent < 0)
          throw std::invalid_argument("MultiPoly::parse: negative exponent");
        tok = tok.substr(0, caret);
      }
      const auto v = var_from_name(tok);
      if (!v)
        throw std::invalid_argument("MultiPoly::parse: unknown variable '" +
                                    std::string(tok) + "'");
      term *= pow(variable(*v), exponent);
    }
    result += term;

    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  return result;
}

}  // namespace gjms
