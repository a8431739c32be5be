#include "maniforge/presentation.hpp"

#include <cstdlib>
#include <istream>
#include <sstream>
#include <string>

namespace maniforge {

GroupPresentation read_presentation(std::istream& in) {
  GroupPresentation p;
  bool have_header = false;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "gens") throw ParseError(number, "expected 'gens <n>'");
      try {
        p.generator_count = std::stoul(tokens[1]);
      } catch (const std::exception&) {
        throw ParseError(number, "bad generator count '" + tokens[1] + "'");
      }
      if (p.generator_count == 0 || p.generator_count > kMaxRank) {
        throw ParseError(number, "generator count must be in 1.." + std::to_string(kMaxRank));
      }
      have_header = true;
      continue;
    }
    std::vector<Colour> word;
    for (const auto& tok : tokens) {
      if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9) {
        throw ParseError(number, "bad generator index '" + tok + "'");
      }
      const auto g = std::stoul(tok);
      if (g >= p.generator_count) throw ParseError(number, "generator index " + tok + " out of range");
      word.push_back(static_cast<Colour>(g));
    }
    p.relators.push_back(std::move(word));
  }
  if (!have_header) throw ParseError(number + 1, "missing 'gens <n>' header");
  return p;
}

std::vector<Colour> power(const std::vector<Colour>& w, std::size_t k) {
  std::vector<Colour> out;
  out.reserve(w.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

GroupPresentation polygon_presentation(std::size_t m) { return string_presentation({m}); }

GroupPresentation string_presentation(const std::vector<std::size_t>& schlafli,
                                      std::vector<std::vector<Colour>> extra) {
  GroupPresentation p;
  p.generator_count = schlafli.size() + 1;
  for (Colour i = 0; i < schlafli.size(); ++i) p.relators.push_back(power({i, i + 1}, schlafli[i]));
  for (Colour i = 0; i < p.generator_count; ++i) {
    for (Colour j = i + 2; j < p.generator_count; ++j) p.relators.push_back(power({i, j}, 2));
  }
  for (auto& w : extra) p.relators.push_back(std::move(w));
  return p;
}

namespace {

constexpr std::int64_t kUndefined = -1;

class ToddCoxeter {
 public:
  ToddCoxeter(const GroupPresentation& p, std::size_t max_cosets)
      : gens_(p.generator_count), relators_(p.relators), max_(max_cosets) {
    for (const auto& w : relators_) {
      if (w.empty()) throw Error("presentation contains an empty relator");
      for (Colour g : w) {
        if (g >= gens_) throw Error("relator uses generator " + std::to_string(g) + " out of range");
      }
    }
    if (max_ == 0) throw CosetOverflow(max_);
    add_row();
  }

  CosetTable run() {
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(parent_.size()); ++c) {
      for (const auto& w : relators_) {
        if (!alive(c)) break;
        scan_and_fill(c, w);
      }
      if (!alive(c)) continue;
      for (Colour x = 0; x < gens_; ++x) {
        if (at(c, x) == kUndefined) define(c, x);
      }
    }
    return compact();
  }

 private:
  std::int64_t& at(std::int64_t c, Colour x) { return table_[static_cast<std::size_t>(c) * gens_ + x]; }
  bool alive(std::int64_t c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  void add_row() {
    if (parent_.size() >= max_) throw CosetOverflow(max_);
    parent_.push_back(static_cast<std::int64_t>(parent_.size()));
    table_.resize(table_.size() + gens_, kUndefined);
  }

  // Generators are involutions, so the inverse entry is in the same column.
  void define(std::int64_t c, Colour x) {
    add_row();
    const auto d = static_cast<std::int64_t>(parent_.size()) - 1;
    at(c, x) = d;
    at(d, x) = c;
  }

  void scan_and_fill(std::int64_t c, const std::vector<Colour>& w) {
    std::int64_t f = c;
    std::int64_t b = c;
    std::int64_t i = 0;
    std::int64_t j = static_cast<std::int64_t>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[i]) != kUndefined) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[j]) != kUndefined) b = at(b, w[j--]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, w[i]) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  std::int64_t rep(std::int64_t c) {
    std::int64_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const auto next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::int64_t k, std::int64_t l, std::vector<std::int64_t>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
  }

  void coincidence(std::int64_t a, std::int64_t b) {
    std::vector<std::int64_t> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto e = queue[q];
      for (Colour x = 0; x < gens_; ++x) {
        const auto f = at(e, x);
        if (f == kUndefined) continue;
        at(f, x) = kUndefined;
        const auto e1 = rep(e);
        const auto f1 = rep(f);
        if (at(e1, x) != kUndefined) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, x) != kUndefined) {
          merge(e1, at(f1, x), queue);
        } else {
          at(e1, x) = f1;
          at(f1, x) = e1;
        }
      }
    }
  }

  CosetTable compact() {
    std::vector<std::int64_t> number(parent_.size(), kUndefined);
    Flag next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (alive(static_cast<std::int64_t>(c))) number[c] = next++;
    }
    CosetTable out;
    out.action.assign(gens_, std::vector<Flag>(next));
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (number[c] == kUndefined) continue;
      for (Colour x = 0; x < gens_; ++x) {
        const auto target = at(static_cast<std::int64_t>(c), x);
        if (target == kUndefined) throw Error("coset enumeration left an undefined entry");
        out.action[x][static_cast<std::size_t>(number[c])] = static_cast<Flag>(number[rep(target)]);
      }
    }
    for (const auto& w : relators_) {
      for (Flag c = 0; c < next; ++c) {
        Flag d = c;
        for (Colour g : w) d = out.action[g][d];
        if (d != c) throw Error("coset enumeration produced a table violating a relator");
      }
    }
    return out;
  }

  std::size_t gens_;
  std::vector<std::vector<Colour>> relators_;
  std::size_t max_;
  std::vector<std::int64_t> table_;
  std::vector<std::int64_t> parent_;
};

}  // namespace

CosetTable coset_enumerate(const GroupPresentation& p, std::size_t max_cosets) {
  if (p.generator_count == 0) throw Error("presentation has no generators");
  return ToddCoxeter(p, max_cosets).run();
}

Maniplex maniplex_from_presentation(const GroupPresentation& p, std::size_t max_cosets) {
  auto table = coset_enumerate(p, max_cosets);
  try {
    return validate(ColouredGraph(p.generator_count, std::move(table.action)));
  } catch (const ValidationError& e) {
    throw NotManiplex(e);
  }
}

std::size_t max_cosets_from_env() {
  if (const char* env = std::getenv("MANIFORGE_MAX_COSETS")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultMaxCosets;
}

}  // namespace maniforge
