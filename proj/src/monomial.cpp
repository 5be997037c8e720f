#include "lcstruct/monomial.hpp"

#include "lcstruct/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lcstruct {

CMonomialIdeal CMonomialIdeal::validate(int variables, std::vector<Generator> generators) {
  if (generators.empty())
    throw Error(Errc::EmptyGeneratorList, "ideal has no generators");
  if (variables < 1)
    throw Error(Errc::LengthMismatch, "variable count must be positive");
  for (std::size_t j = 0; j < generators.size(); ++j) {
    auto& g = generators[j];
    const std::string where = "generator " + std::to_string(j + 1);
    if (static_cast<int>(g.exponents.size()) != variables)
      throw Error(Errc::LengthMismatch,
                  where + ": exponent vector has length " + std::to_string(g.exponents.size()) +
                      ", expected " + std::to_string(variables),
                  j);
    if (g.coefficient == 0)
      throw Error(Errc::ZeroCoefficient, where + ": coefficient is zero", j);
    if (std::any_of(g.exponents.begin(), g.exponents.end(), [](int e) { return e < 0; }))
      throw Error(Errc::BadInput, where + ": negative exponent", j);
    if (std::all_of(g.exponents.begin(), g.exponents.end(), [](int e) { return e == 0; }))
      throw Error(Errc::ConstantMonomial, where + ": monomial part is constant", j);
    g.coefficient = abs(g.coefficient);
  }
  return CMonomialIdeal(variables, std::move(generators));
}

bool CMonomialIdeal::is_usual() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Generator& g) { return g.coefficient == 1; });
}

std::vector<std::size_t> CMonomialIdeal::unit_generators() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < generators_.size(); ++j)
    if (generators_[j].coefficient == 1) out.push_back(j);
  return out;
}

Int CMonomialIdeal::coefficient_product() const {
  Int theta = 1;
  for (const auto& g : generators_) theta *= g.coefficient;
  return theta;
}

CMonomialIdeal CMonomialIdeal::simplified() const {
  std::vector<Generator> merged;
  for (const auto& g : generators_) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const Generator& m) { return m.exponents == g.exponents; });
    if (it == merged.end()) {
      merged.push_back(g);
    } else {
      mpz_gcd(it->coefficient.get_mpz_t(), it->coefficient.get_mpz_t(),
              g.coefficient.get_mpz_t());
    }
  }
  return CMonomialIdeal(variables_, std::move(merged));
}

std::vector<int> support(const Exponents& monomial) {
  std::vector<int> out;
  for (std::size_t i = 0; i < monomial.size(); ++i)
    if (monomial[i] > 0) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void require_usual(const CMonomialIdeal& ideal, const char* op) {
  if (!ideal.is_usual())
    throw Error(Errc::NotUsual, std::string(op) + " requires unit coefficients");
}

// Minimal generators of a monomial ideal, sorted.
std::vector<Exponents> minimize(std::vector<Exponents> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponents> out;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < gens.size() && !redundant; ++b)
      redundant = b != a && divides(gens[b], gens[a]);
    if (!redundant) out.push_back(gens[a]);
  }
  return out;
}

void decompose(std::vector<Exponents> gens, std::vector<IrreducibleComponent>& out) {
  gens = minimize(std::move(gens));
  const std::size_t n = gens.front().size();
  for (const auto& g : gens) {
    const auto supp = support(g);
    if (supp.size() < 2) continue;
    const int i = supp.front();
    Exponents pure(n, 0), rest = g;
    pure[i] = g[i];
    rest[i] = 0;
    auto left = gens, right = gens;
    left.push_back(pure);
    right.push_back(rest);
    decompose(std::move(left), out);
    decompose(std::move(right), out);
    return;
  }
  IrreducibleComponent component(n, 0);
  for (const auto& g : gens) component[support(g).front()] = g[support(g).front()];
  out.push_back(component);
}

// Ideal containment for pure-power ideals: big ⊇ small.
bool component_contains(const IrreducibleComponent& big, const IrreducibleComponent& small) {
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] == 0) continue;
    if (big[i] == 0 || big[i] > small[i]) return false;
  }
  return true;
}

std::vector<Exponents> monomials(const CMonomialIdeal& ideal) {
  std::vector<Exponents> out;
  for (const auto& g : ideal.generators()) out.push_back(g.exponents);
  return out;
}

}  // namespace

bool contains_monomial(const CMonomialIdeal& usual, const Exponents& monomial) {
  return std::any_of(usual.generators().begin(), usual.generators().end(),
                     [&](const Generator& g) { return divides(g.exponents, monomial); });
}

CMonomialIdeal radical_usual(const CMonomialIdeal& ideal) {
  require_usual(ideal, "radical_usual");
  std::vector<Exponents> squarefree;
  for (const auto& g : ideal.generators()) {
    Exponents e(g.exponents.size(), 0);
    for (int i : support(g.exponents)) e[i] = 1;
    squarefree.push_back(e);
  }
  std::vector<Generator> gens;
  for (auto& e : minimize(std::move(squarefree))) gens.push_back({Int(1), std::move(e)});
  return CMonomialIdeal::validate(ideal.variables(), std::move(gens));
}

std::vector<IrreducibleComponent> primary_decompose(const CMonomialIdeal& ideal) {
  require_usual(ideal, "primary_decompose");
  std::vector<IrreducibleComponent> raw;
  decompose(monomials(ideal), raw);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<IrreducibleComponent> out;
  for (std::size_t a = 0; a < raw.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < raw.size() && !redundant; ++b)
      redundant = b != a && component_contains(raw[a], raw[b]);
    if (!redundant) out.push_back(raw[a]);
  }
  return out;
}

std::vector<MonomialPrime> associated_primes(const CMonomialIdeal& ideal) {
  std::set<MonomialPrime> primes;
  for (const auto& q : primary_decompose(ideal)) primes.insert(MonomialPrime{support(q)});
  return {primes.begin(), primes.end()};
}

Exponents Block::representative() const {
  Exponents rep(nonneg.size());
  for (std::size_t i = 0; i < nonneg.size(); ++i) rep[i] = nonneg[i] ? 0 : -1;
  return rep;
}

bool Block::contains(const Exponents& degree) const {
  if (degree.size() != nonneg.size()) return false;
  for (std::size_t i = 0; i < degree.size(); ++i)
    if ((degree[i] >= 0) != nonneg[i]) return false;
  return true;
}

std::string Block::label() const {
  std::string out;
  for (bool b : nonneg) out += b ? '+' : '-';
  return out;
}

std::vector<Block> blocks(int n) {
  std::vector<Block> out;
  const unsigned long count = 1ul << n;
  for (unsigned long mask = 0; mask < count; ++mask) {
    Block b{std::vector<bool>(n)};
    // most significant bit is the first coordinate
    for (int i = 0; i < n; ++i) b.nonneg[i] = (mask >> (n - 1 - i)) & 1ul;
    out.push_back(std::move(b));
  }
  return out;
}

Block block_of(const Exponents& degree) {
  Block b{std::vector<bool>(degree.size())};
  for (std::size_t i = 0; i < degree.size(); ++i) b.nonneg[i] = degree[i] >= 0;
  return b;
}

namespace {

std::string variable_name(std::size_t i, std::size_t n) {
  static const char* kNames[] = {"X", "Y", "Z"};
  if (n <= 3) return kNames[i];
  return "X" + std::to_string(i + 1);
}

}  // namespace

std::string format_monomial(const Exponents& exponents) {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    out += variable_name(i, exponents.size());
    if (exponents[i] != 1) out += "^" + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_degree(const Exponents& degree) {
  std::string out = "(";
  for (std::size_t i = 0; i < degree.size(); ++i) out += (i ? "," : "") + std::to_string(degree[i]);
  return out + ")";
}

std::string format_ideal(const CMonomialIdeal& ideal) {
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < ideal.size(); ++j) {
    if (j) out << ", ";
    if (ideal[j].coefficient != 1) out << ideal[j].coefficient.get_str();
    out << format_monomial(ideal[j].exponents);
  }
  out << ')';
  return out.str();
}

}  // namespace lcstruct
