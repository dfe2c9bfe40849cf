#include "wchain/state.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace wchain {

namespace {

constexpr double kNormalizationTolerance = 1e-12;

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Ket::Ket(int n_atoms) : n_atoms_(n_atoms) {
  if (n_atoms < 1 || n_atoms > kMaxAtoms) {
    throw std::invalid_argument("ket length must be in [1, " + std::to_string(kMaxAtoms) + "]");
  }
}

void Ket::add(const BasisConfig& config, Amplitude amplitude) {
  if (config.n_atoms() != n_atoms_) {
    throw std::invalid_argument("configuration length does not match the ket");
  }
  if (amplitude == Amplitude{}) return;
  auto [it, inserted] = terms_.try_emplace(config, amplitude);
  if (!inserted) {
    it->second += amplitude;
    if (it->second == Amplitude{}) terms_.erase(it);
  }
}

double Ket::norm_sq() const {
  double s = 0.0;
  for (const auto& [config, amp] : terms_) s += std::norm(amp);
  return s;
}

Amplitude Ket::inner(const Ket& rhs) const {
  if (rhs.n_atoms_ != n_atoms_) {
    throw std::invalid_argument("inner product requires equal chain lengths");
  }
  Amplitude acc{};
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() && b != rhs.terms_.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      acc += std::conj(a->second) * b->second;
      ++a;
      ++b;
    }
  }
  return acc;
}

Ket& Ket::operator*=(Amplitude factor) {
  if (factor == Amplitude{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [config, amp] : terms_) amp *= factor;
  return *this;
}

Ket& Ket::operator+=(const Ket& rhs) {
  if (rhs.n_atoms_ != n_atoms_) {
    throw std::invalid_argument("ket sum requires equal chain lengths");
  }
  for (const auto& [config, amp] : rhs.terms_) add(config, amp);
  return *this;
}

PureState::PureState(Ket ket) : ket_(std::move(ket)) {
  if (std::abs(ket_.norm_sq() - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument("state is not normalized");
  }
}

RawStateSpec::RawStateSpec(std::vector<SpecTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw std::invalid_argument("state spec has no terms");
  }
  n_atoms_ = terms_.front().config.n_atoms();
  for (const auto& t : terms_) {
    if (t.config.n_atoms() != n_atoms_) {
      throw std::invalid_argument("state spec mixes configuration lengths");
    }
    norm_sq_ += t.coefficient * t.coefficient;
  }
  if (norm_sq_ == 0) {
    throw std::invalid_argument("state spec has all-zero coefficients");
  }
  auto sorted = terms_;
  std::sort(sorted.begin(), sorted.end(),
            [](const SpecTerm& a, const SpecTerm& b) { return a.config < b.config; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].config == sorted[i - 1].config) {
      throw std::invalid_argument("duplicate configuration '" + sorted[i].config.str() +
                                  "' in state spec; pre-sum coefficients");
    }
  }
}

RawStateSpec RawStateSpec::parse(std::istream& in) {
  std::vector<SpecTerm> terms;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string coeff_tok, config_tok, extra;
    ls >> coeff_tok >> config_tok;
    if (config_tok.empty() || (ls >> extra)) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected '<signed-int> <config>'");
    }
    std::size_t used = 0;
    std::int64_t coeff = 0;
    try {
      coeff = std::stoll(coeff_tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != coeff_tok.size()) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": coefficient '" + coeff_tok + "' is not an integer");
    }
    terms.push_back({coeff, BasisConfig::from_string(config_tok)});
  }
  return RawStateSpec(std::move(terms));
}

RawStateSpec RawStateSpec::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

std::string RawStateSpec::descriptor() const {
  auto sorted = terms_;
  std::sort(sorted.begin(), sorted.end(),
            [](const SpecTerm& a, const SpecTerm& b) { return a.config < b.config; });
  std::string out;
  for (const auto& t : sorted) {
    if (t.coefficient == 0) continue;
    out += (t.coefficient > 0 ? "+" : "");
    out += std::to_string(t.coefficient);
    out += t.config.str();
  }
  return out;
}

PureState make_separable(int n_excited, int n_ground) {
  if (n_excited < 0 || n_ground < 0) {
    throw std::invalid_argument("atom counts must be non-negative");
  }
  const int n = n_excited + n_ground;
  if (n < 1) {
    throw std::invalid_argument("separable state needs at least one atom");
  }
  Ket ket(n);
  const std::uint32_t mask = (n_excited == 0) ? 0u : ((1u << n_excited) - 1u);
  ket.add(BasisConfig(mask, n), 1.0);
  return PureState(std::move(ket));
}

PureState make_symmetric_w(int n_excited, int n_atoms) {
  if (n_excited < 1 || n_excited > n_atoms) {
    throw std::invalid_argument("symmetric state requires 1 <= n_excited <= n_atoms");
  }
  const std::int64_t count = binomial(n_atoms, n_excited);
  if (count > 2'000'000) {
    throw std::invalid_argument("symmetric state would exceed 2e6 terms");
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(count));
  Ket ket(n_atoms);
  for (const auto& config : configurations_with_excitations(n_atoms, n_excited)) {
    ket.add(config, amp);
  }
  return PureState(std::move(ket));
}

PureState make_from_spec(const RawStateSpec& spec) {
  const double norm = std::sqrt(static_cast<double>(spec.coefficient_norm_sq()));
  Ket ket(spec.n_atoms());
  for (const auto& t : spec.terms()) {
    if (t.coefficient == 0) continue;
    ket.add(t.config, static_cast<double>(t.coefficient) / norm);
  }
  return PureState(std::move(ket));
}

PureState normalized(Ket ket) {
  const double n2 = ket.norm_sq();
  if (n2 <= 0.0) {
    throw std::invalid_argument("cannot normalize the zero ket");
  }
  ket *= 1.0 / std::sqrt(n2);
  return PureState(std::move(ket));
}

std::optional<int> uniform_excitation(const PureState& state) {
  std::optional<int> n;
  for (const auto& [config, amp] : state.terms()) {
    const int c = config.excitation_count();
    if (!n) {
      n = c;
    } else if (*n != c) {
      return std::nullopt;
    }
  }
  return n;
}

}  // namespace wchain
