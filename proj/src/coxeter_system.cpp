#include "coxeter2d/coxeter_system.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace coxeter2d {

Generator Generator::x(int i) {
  if (i < 1) throw std::invalid_argument("Generator::x: index must be >= 1");
  return Generator{Family::X, i, "x" + std::to_string(i)};
}

Generator Generator::y(int i) {
  if (i < 1) throw std::invalid_argument("Generator::y: index must be >= 1");
  return Generator{Family::Y, i, "y" + std::to_string(i)};
}

Generator Generator::named(std::string label) {
  if (label.empty()) throw std::invalid_argument("Generator::named: empty label");
  return Generator{Family::Named, 0, std::move(label)};
}

Generator Generator::from_label(std::string_view label) {
  if (label.size() >= 2 && (label[0] == 'x' || label[0] == 'y')) {
    std::string_view digits = label.substr(1);
    const bool canonical =
        digits[0] != '0' &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() <= 7;
    if (canonical) {
      const int idx = std::stoi(std::string(digits));
      return label[0] == 'x' ? Generator::x(idx) : Generator::y(idx);
    }
  }
  return Generator::named(std::string(label));
}

std::string word_str(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].label();
  }
  return out;
}

GeneratorSubset::GeneratorSubset(std::vector<Generator> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool GeneratorSubset::contains(const Generator& g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

namespace {

uint32_t triple_key(int i, int j, int k) {
  // positions already sorted ascending, each < 64
  return (static_cast<uint32_t>(i) << 12) | (static_cast<uint32_t>(j) << 6) |
         static_cast<uint32_t>(k);
}

}  // namespace

TwoDimCoxeterSystem::TwoDimCoxeterSystem(std::vector<Generator> generators,
                                         const PairLabels& f, const TripleLabels& g)
    : gens_(std::move(generators)) {
  const int m = num_generators();
  if (m > 64) {
    throw std::invalid_argument("TwoDimCoxeterSystem: at most 64 generators supported");
  }
  for (int i = 0; i < m; ++i) {
    if (!pos_.emplace(gens_[i].label(), i).second) {
      throw std::invalid_argument("TwoDimCoxeterSystem: duplicate generator '" +
                                  gens_[i].label() + "'");
    }
  }
  f_.assign(static_cast<size_t>(m) * m, -1);
  for (const auto& [a, b, value] : f) {
    const int i = position_or_throw(a);
    const int j = position_or_throw(b);
    if (i == j) {
      throw std::invalid_argument("TwoDimCoxeterSystem: pair label on a single generator");
    }
    if (value < 0) throw std::invalid_argument("TwoDimCoxeterSystem: negative pair label");
    if (f_[static_cast<size_t>(i) * m + j] != -1) {
      throw std::invalid_argument("TwoDimCoxeterSystem: pair labeled twice: " +
                                  a.label() + "," + b.label());
    }
    f_[static_cast<size_t>(i) * m + j] = value;
    f_[static_cast<size_t>(j) * m + i] = value;
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (f_[static_cast<size_t>(i) * m + j] == -1) {
        throw std::invalid_argument("TwoDimCoxeterSystem: f must be total; missing pair " +
                                    gens_[i].label() + "," + gens_[j].label());
      }
    }
  }
  for (const auto& [a, b, c, value] : g) {
    int p[3] = {position_or_throw(a), position_or_throw(b), position_or_throw(c)};
    std::sort(p, p + 3);
    if (p[0] == p[1] || p[1] == p[2]) {
      throw std::invalid_argument("TwoDimCoxeterSystem: triple label needs three distinct generators");
    }
    if (value < 0) throw std::invalid_argument("TwoDimCoxeterSystem: negative triple label");
    const uint32_t key = triple_key(p[0], p[1], p[2]);
    if (g_.count(key)) {
      throw std::invalid_argument("TwoDimCoxeterSystem: triple labeled twice");
    }
    if (value > 0) g_.emplace(key, value);
  }
}

std::optional<int> TwoDimCoxeterSystem::find(const Generator& g) const {
  auto it = pos_.find(g.label());
  if (it == pos_.end() || gens_[it->second] != g) return std::nullopt;
  return it->second;
}

int TwoDimCoxeterSystem::position_or_throw(const Generator& g) const {
  auto p = find(g);
  if (!p) {
    throw std::invalid_argument("generator '" + g.label() + "' is not in the system");
  }
  return *p;
}

int TwoDimCoxeterSystem::triple_at(int i, int j, int k) const {
  auto it = g_.find(triple_key(i, j, k));
  return it == g_.end() ? 0 : it->second;
}

int TwoDimCoxeterSystem::pair_label(const Generator& a, const Generator& b) const {
  const int i = position_or_throw(a);
  const int j = position_or_throw(b);
  if (i == j) throw std::invalid_argument("pair_label: generators must be distinct");
  return pair_at(i, j);
}

int TwoDimCoxeterSystem::triple_label(const Generator& a, const Generator& b,
                                      const Generator& c) const {
  int p[3] = {position_or_throw(a), position_or_throw(b), position_or_throw(c)};
  std::sort(p, p + 3);
  if (p[0] == p[1] || p[1] == p[2]) {
    throw std::invalid_argument("triple_label: generators must be distinct");
  }
  return triple_at(p[0], p[1], p[2]);
}

TwoDimCoxeterSystem TwoDimCoxeterSystem::with_pair_label(const Generator& a,
                                                         const Generator& b,
                                                         int value) const {
  if (value < 0) throw std::invalid_argument("with_pair_label: negative label");
  const int i = position_or_throw(a);
  const int j = position_or_throw(b);
  if (i == j) throw std::invalid_argument("with_pair_label: generators must be distinct");
  TwoDimCoxeterSystem out = *this;
  const int m = num_generators();
  out.f_[static_cast<size_t>(i) * m + j] = value;
  out.f_[static_cast<size_t>(j) * m + i] = value;
  return out;
}

std::vector<Word> TwoDimCoxeterSystem::relators() const {
  const int m = num_generators();
  std::vector<Word> out;
  for (int i = 0; i < m; ++i) out.push_back(Word{gens_[i], gens_[i]});
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const int f = pair_at(i, j);
      if (f < 1) continue;
      Word w;
      w.reserve(2 * f);
      for (int r = 0; r < f; ++r) {
        w.push_back(gens_[i]);
        w.push_back(gens_[j]);
      }
      out.push_back(std::move(w));
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        const int g = triple_at(i, j, k);
        if (g < 1) continue;
        Word w;
        w.reserve(3 * g);
        for (int r = 0; r < g; ++r) {
          w.push_back(gens_[i]);
          w.push_back(gens_[j]);
          w.push_back(gens_[k]);
        }
        out.push_back(std::move(w));
      }
    }
  }
  return out;
}

TwoDimCoxeterSystem a2n(int n) {
  if (n < 1) throw std::invalid_argument("a2n: n must be >= 1");
  std::vector<Generator> gens;
  gens.reserve(2 * n);
  for (int i = 1; i <= n; ++i) gens.push_back(Generator::x(i));
  for (int i = 1; i <= n; ++i) gens.push_back(Generator::y(i));

  TwoDimCoxeterSystem::PairLabels f;
  for (size_t a = 0; a < gens.size(); ++a) {
    for (size_t b = a + 1; b < gens.size(); ++b) {
      const Generator& u = gens[a];
      const Generator& v = gens[b];
      int label = 2;
      if (u.family == v.family && std::abs(u.index - v.index) == 1) label = 4;
      if (u.family != v.family && u.index == v.index) label = 3;
      f.emplace_back(u, v, label);
    }
  }

  TwoDimCoxeterSystem::TripleLabels g;
  for (int i = 1; i + 1 <= n; ++i) {
    g.emplace_back(Generator::x(i), Generator::x(i + 1), Generator::y(i), 3);
    g.emplace_back(Generator::x(i), Generator::x(i + 1), Generator::y(i + 1), 3);
    g.emplace_back(Generator::x(i), Generator::y(i), Generator::y(i + 1), 3);
    g.emplace_back(Generator::x(i + 1), Generator::y(i), Generator::y(i + 1), 3);
  }
  for (int i = 1; i + 2 <= n; ++i) {
    g.emplace_back(Generator::x(i), Generator::x(i + 1), Generator::x(i + 2), 4);
    g.emplace_back(Generator::y(i), Generator::y(i + 1), Generator::y(i + 2), 4);
  }
  return TwoDimCoxeterSystem(std::move(gens), f, g);
}

TwoDimCoxeterSystem restricted(const TwoDimCoxeterSystem& system,
                               const GeneratorSubset& subset) {
  std::vector<Generator> kept;
  for (const Generator& g : system.generators()) {
    if (subset.contains(g)) kept.push_back(g);
  }
  if (static_cast<int>(kept.size()) != subset.size()) {
    for (const Generator& g : subset.members()) {
      if (!system.contains(g)) {
        throw std::invalid_argument("restricted: generator '" + g.label() +
                                    "' is not in the ambient system");
      }
    }
  }
  TwoDimCoxeterSystem::PairLabels f;
  for (size_t a = 0; a < kept.size(); ++a) {
    for (size_t b = a + 1; b < kept.size(); ++b) {
      f.emplace_back(kept[a], kept[b], system.pair_label(kept[a], kept[b]));
    }
  }
  TwoDimCoxeterSystem::TripleLabels g;
  for (size_t a = 0; a < kept.size(); ++a) {
    for (size_t b = a + 1; b < kept.size(); ++b) {
      for (size_t c = b + 1; c < kept.size(); ++c) {
        const int label = system.triple_label(kept[a], kept[b], kept[c]);
        if (label > 0) g.emplace_back(kept[a], kept[b], kept[c], label);
      }
    }
  }
  return TwoDimCoxeterSystem(std::move(kept), f, g);
}

GeneratorSubset generator_subset(const Decomposition& lambda, const Decomposition& mu) {
  if (lambda.total() != mu.total()) {
    throw std::invalid_argument("generator_subset: totals differ (" + lambda.str() +
                                " vs " + mu.str() + ")");
  }
  if (lambda.total() < 2) {
    throw std::invalid_argument("generator_subset: total must be >= 2");
  }
  const int n = lambda.total() - 1;
  const auto sl = stopovers(lambda);
  const auto sm = stopovers(mu);
  std::vector<Generator> members;
  for (int i = 1; i <= n; ++i) {
    if (!std::binary_search(sl.begin(), sl.end(), i)) members.push_back(Generator::x(i));
  }
  for (int j = 1; j <= n; ++j) {
    if (!std::binary_search(sm.begin(), sm.end(), j)) members.push_back(Generator::y(j));
  }
  return GeneratorSubset(std::move(members));
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_diagram(const TwoDimCoxeterSystem& system, DiagramFormat format) {
  const auto& gens = system.generators();
  const int m = static_cast<int>(gens.size());

  if (format == DiagramFormat::Json) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& g : gens) j["vertices"].push_back(g.label());
    j["edges"] = nlohmann::json::array();
    for (int i = 0; i < m; ++i) {
      for (int k = i + 1; k < m; ++k) {
        j["edges"].push_back({{"a", gens[i].label()},
                              {"b", gens[k].label()},
                              {"f", system.pair_label(gens[i], gens[k])}});
      }
    }
    j["facets"] = nlohmann::json::array();
    for (int i = 0; i < m; ++i) {
      for (int k = i + 1; k < m; ++k) {
        for (int l = k + 1; l < m; ++l) {
          const int g = system.triple_label(gens[i], gens[k], gens[l]);
          if (g == 0) continue;
          j["facets"].push_back({{"a", gens[i].label()},
                                 {"b", gens[k].label()},
                                 {"c", gens[l].label()},
                                 {"g", g}});
        }
      }
    }
    return j.dump(2);
  }

  if (format != DiagramFormat::Dot) {
    throw std::invalid_argument("export_diagram: unsupported format");
  }

  std::ostringstream os;
  os << "graph coxeter_diagram {\n";
  os << "  node [shape=circle];\n";
  for (const auto& g : gens) os << "  \"" << dot_escape(g.label()) << "\";\n";
  for (int i = 0; i < m; ++i) {
    for (int k = i + 1; k < m; ++k) {
      const int f = system.pair_label(gens[i], gens[k]);
      os << "  \"" << dot_escape(gens[i].label()) << "\" -- \""
         << dot_escape(gens[k].label()) << "\"";
      if (f == 2) {
        os << " [style=dotted]";
      } else if (f == 3) {
        // plain edge
      } else if (f == 4) {
        os << " [style=bold]";
      } else {
        os << " [label=\"" << f << "\"]";
      }
      os << ";\n";
    }
  }
  // DOT has no native 2-cells; labeled facets become auxiliary triangle nodes.
  int facet_id = 0;
  for (int i = 0; i < m; ++i) {
    for (int k = i + 1; k < m; ++k) {
      for (int l = k + 1; l < m; ++l) {
        const int g = system.triple_label(gens[i], gens[k], gens[l]);
        if (g < 3) continue;
        const std::string node = "t" + std::to_string(facet_id++);
        os << "  \"" << node << "\" [shape=triangle, label=\"" << g << "\"];\n";
        for (int v : {i, k, l}) {
          os << "  \"" << node << "\" -- \"" << dot_escape(gens[v].label())
             << "\" [style=dashed];\n";
        }
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace coxeter2d
