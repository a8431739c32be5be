#include "maniforge/poset.hpp"

#include <algorithm>
#include <map>

namespace maniforge {

using nlohmann::json;

json PropertyCertificate::to_json() const {
  json j{{"verdict", verdict}};
  if (!witness.is_null()) j["witness"] = witness;
  if (!route.empty()) j["route"] = route;
  return j;
}

PropertyCertificate PropertyCertificate::from_json(const std::string& property, const json& j) {
  PropertyCertificate c;
  c.property = property;
  c.verdict = j.at("verdict").get<bool>();
  if (j.contains("witness")) c.witness = j.at("witness");
  if (j.contains("route")) c.route = j.at("route").get<std::string>();
  return c;
}

FlaggedPoset::FlaggedPoset(std::size_t rank, std::vector<Element> elements, std::vector<std::vector<char>> leq)
    : rank_(rank), elements_(std::move(elements)), leq_(std::move(leq)), by_rank_(rank + 2) {
  if (leq_.size() != elements_.size()) throw Error("FlaggedPoset: order matrix size mismatch");
  int previous = -1;
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    const int r = elements_[e].rank;
    if (r < -1 || r > static_cast<int>(rank_)) throw Error("FlaggedPoset: element rank out of range");
    if (r < previous) throw Error("FlaggedPoset: elements must be grouped by increasing rank");
    previous = r;
    if (leq_[e].size() != elements_.size() || !leq_[e][e]) throw Error("FlaggedPoset: order is not reflexive");
    by_rank_[static_cast<std::size_t>(r + 1)].push_back(e);
  }
  if (by_rank_.front().size() != 1 || by_rank_.back().size() != 1) {
    throw Error("FlaggedPoset: least and greatest elements must be unique");
  }
}

std::vector<Chain> FlaggedPoset::maximal_chains() const {
  std::vector<Chain> out;
  Chain chain{bottom()};
  // Depth-first over ranks 0..n; every new element must sit above all chosen ones.
  auto extend = [&](auto&& self, int r) -> void {
    if (r > static_cast<int>(rank_)) {
      out.push_back(chain);
      return;
    }
    for (std::size_t e : of_rank(r)) {
      bool ok = true;
      for (std::size_t c : chain) {
        if (!leq(c, e)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chain.push_back(e);
      self(self, r + 1);
      chain.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

FlaggedPoset build_poset(const Maniplex& m) {
  const auto n = m.rank();
  const auto labels = face_labels(m);

  std::vector<FlaggedPoset::Element> elements;
  std::vector<std::size_t> offset(n);
  std::vector<Flag> all(m.flag_count());
  for (Flag u = 0; u < all.size(); ++u) all[u] = u;
  elements.push_back({-1, 0, all});
  for (Colour i = 0; i < n; ++i) {
    offset[i] = elements.size();
    for (std::size_t k = 0; k < labels.counts[i]; ++k) elements.push_back({static_cast<int>(i), k, {}});
    for (Flag u = 0; u < m.flag_count(); ++u) elements[offset[i] + labels.labels[i][u]].flags.push_back(u);
  }
  elements.push_back({static_cast<int>(n), 0, all});

  const auto size = elements.size();
  std::vector<std::vector<char>> leq(size, std::vector<char>(size, 0));
  for (std::size_t e = 0; e < size; ++e) {
    leq[0][e] = 1;
    leq[e][size - 1] = 1;
    leq[e][e] = 1;
  }
  for (Flag u = 0; u < m.flag_count(); ++u) {
    for (Colour i = 0; i < n; ++i) {
      for (Colour j = i + 1; j < n; ++j) {
        leq[offset[i] + labels.labels[i][u]][offset[j] + labels.labels[j][u]] = 1;
      }
    }
  }
  return FlaggedPoset(n, std::move(elements), std::move(leq));
}

namespace {

json element_ref(const FlaggedPoset& p, std::size_t e) {
  return json{{"rank", p.element(e).rank}, {"id", p.element(e).id}};
}

}  // namespace

PropertyCertificate is_thin(const FlaggedPoset& p) {
  PropertyCertificate cert{"thin", true, nullptr, ""};
  std::size_t diamonds = 0;
  const int n = static_cast<int>(p.rank());
  for (int i = 0; i < n; ++i) {
    for (std::size_t lo : p.of_rank(i - 1)) {
      for (std::size_t hi : p.of_rank(i + 1)) {
        if (!p.leq(lo, hi)) continue;
        std::vector<std::size_t> middle;
        for (std::size_t mid : p.of_rank(i)) {
          if (p.leq(lo, mid) && p.leq(mid, hi)) middle.push_back(mid);
        }
        if (middle.size() != 2) {
          json mids = json::array();
          for (auto e : middle) mids.push_back(element_ref(p, e));
          cert.verdict = false;
          cert.witness = json{{"rank", i}, {"lower", element_ref(p, lo)}, {"upper", element_ref(p, hi)},
                              {"middle", mids}};
          return cert;
        }
        ++diamonds;
      }
    }
  }
  cert.witness = json{{"diamonds_checked", diamonds}};
  return cert;
}

PropertyCertificate is_thin(const Maniplex& m) { return is_thin(build_poset(m)); }

PropertyCertificate is_faithful(const Maniplex& m) {
  const auto labels = face_labels(m);
  std::map<std::vector<std::uint32_t>, std::vector<Flag>> by_faces;
  for (Flag u = 0; u < m.flag_count(); ++u) {
    std::vector<std::uint32_t> key(m.rank());
    for (Colour i = 0; i < m.rank(); ++i) key[i] = labels.labels[i][u];
    by_faces[key].push_back(u);
  }
  PropertyCertificate cert{"faithful", true, nullptr, ""};
  // Report the least flag whose face intersection is not a singleton.
  const std::vector<Flag>* worst = nullptr;
  for (const auto& [key, flags] : by_faces) {
    if (flags.size() > 1 && (worst == nullptr || flags.front() < worst->front())) worst = &flags;
  }
  if (worst != nullptr) {
    cert.verdict = false;
    cert.witness = json{{"flag", worst->front()}, {"intersection", *worst}};
  } else {
    cert.witness = json{{"flags_checked", m.flag_count()}};
  }
  return cert;
}

namespace {

class CipSearch {
 public:
  explicit CipSearch(const Maniplex& m) : m_(m), labels_(face_labels(m)), stamp_(m.flag_count(), 0) {
    const auto n = m.rank();
    incident_.resize(n);
    for (Colour i = 0; i < n; ++i) {
      incident_[i].resize(n);
      for (Colour j = 0; j < n; ++j) {
        incident_[i][j].assign(labels_.counts[i], std::vector<char>(labels_.counts[j], 0));
      }
    }
    for (Flag u = 0; u < m.flag_count(); ++u) {
      for (Colour i = 0; i < n; ++i) {
        for (Colour j = 0; j < n; ++j) incident_[i][j][labels_.labels[i][u]][labels_.labels[j][u]] = 1;
      }
    }
  }

  PropertyCertificate run() {
    PropertyCertificate cert{"cip", true, nullptr, ""};
    const auto n = m_.rank();
    std::vector<Flag> all(m_.flag_count());
    for (Flag u = 0; u < all.size(); ++u) all[u] = u;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      ranks_ = ColourSet(mask).members();
      free_colours_ = ColourSet(mask).complement(n).members();
      chosen_.clear();
      if (search(0, all)) {
        json family = json::array();
        for (std::size_t k = 0; k < ranks_.size(); ++k) family.push_back(json{{"rank", ranks_[k]}, {"id", chosen_[k]}});
        cert.verdict = false;
        cert.witness = json{{"faces", family},
                            {"intersection_size", failure_size_},
                            {"components", failure_components_}};
        return cert;
      }
    }
    cert.witness = json{{"families_checked", families_}};
    return cert;
  }

 private:
  // True when a failing family has been found; chosen_ then holds it.
  bool search(std::size_t k, const std::vector<Flag>& current) {
    if (k == ranks_.size()) {
      ++families_;
      const auto comps = count_components(current);
      if (comps != 1) {
        failure_size_ = current.size();
        failure_components_ = comps;
        return true;
      }
      return false;
    }
    const Colour r = ranks_[k];
    for (std::uint32_t face = 0; face < labels_.counts[r]; ++face) {
      bool incident = true;
      for (std::size_t q = 0; q < k && incident; ++q) incident = incident_[ranks_[q]][r][chosen_[q]][face] != 0;
      if (!incident) continue;
      std::vector<Flag> next;
      for (Flag u : current) {
        if (labels_.labels[r][u] == face) next.push_back(u);
      }
      chosen_.push_back(face);
      if (next.empty()) {
        // The remaining ranks can only shrink an empty intersection; report the prefix.
        ++families_;
        failure_size_ = 0;
        failure_components_ = 0;
        ranks_.resize(k + 1);
        return true;
      }
      if (search(k + 1, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::size_t count_components(const std::vector<Flag>& flags) {
    ++generation_;
    for (Flag u : flags) stamp_[u] = generation_;
    const auto inside = generation_;
    ++generation_;
    const auto visited = generation_;
    std::size_t comps = 0;
    std::vector<Flag> stack;
    for (Flag s : flags) {
      if (stamp_[s] != inside) continue;
      ++comps;
      stamp_[s] = visited;
      stack.push_back(s);
      while (!stack.empty()) {
        const Flag u = stack.back();
        stack.pop_back();
        for (Colour c : free_colours_) {
          const Flag v = m_.neighbour(u, c);
          if (stamp_[v] == inside) {
            stamp_[v] = visited;
            stack.push_back(v);
          }
        }
      }
    }
    return comps;
  }

  const Maniplex& m_;
  FaceLabels labels_;
  std::vector<std::vector<std::vector<std::vector<char>>>> incident_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t generation_{0};
  std::vector<Colour> ranks_;
  std::vector<Colour> free_colours_;
  std::vector<std::uint32_t> chosen_;
  std::size_t families_{0};
  std::size_t failure_size_{0};
  std::size_t failure_components_{0};
};

// Chains plus their i-adjacency in a thin poset.
struct ChainGraph {
  std::vector<Chain> chains;
  std::vector<std::vector<std::size_t>> adj;  // adj[i][c]
};

ChainGraph chain_graph(const FlaggedPoset& p) {
  ChainGraph g;
  g.chains = p.maximal_chains();
  std::map<Chain, std::size_t> index;
  for (std::size_t c = 0; c < g.chains.size(); ++c) index.emplace(g.chains[c], c);
  const auto n = p.rank();
  g.adj.assign(n, std::vector<std::size_t>(g.chains.size()));
  for (std::size_t c = 0; c < g.chains.size(); ++c) {
    const auto& chain = g.chains[c];
    for (Colour i = 0; i < n; ++i) {
      // chain[i + 1] has rank i; its rank-i alternative lies between chain[i] and chain[i + 2].
      std::size_t other = chain[i + 1];
      for (std::size_t e : p.of_rank(static_cast<int>(i))) {
        if (e != chain[i + 1] && p.leq(chain[i], e) && p.leq(e, chain[i + 2])) {
          other = e;
          break;
        }
      }
      Chain swapped = chain;
      swapped[i + 1] = other;
      const auto it = index.find(swapped);
      if (it == index.end()) throw NotThin("chain swap leaves the set of maximal chains");
      g.adj[i][c] = it->second;
    }
  }
  return g;
}

json chain_json(const FlaggedPoset& p, const Chain& chain) {
  json out = json::array();
  for (std::size_t e : chain) out.push_back(p.element(e).id);
  return out;
}

}  // namespace

PropertyCertificate has_cip(const Maniplex& m) { return CipSearch(m).run(); }

PropertyCertificate is_strongly_connected(const FlaggedPoset& p) {
  if (!is_thin(p).verdict) throw NotThin("strong connectivity requires a thin poset");
  const auto g = chain_graph(p);
  const auto n = p.rank();
  const auto count = g.chains.size();

  // label[S][c]: component of chain c when only ranks outside S may change.
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::vector<std::uint32_t>> label(subsets);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < subsets; ++s) {
    const auto moves = ColourSet(static_cast<std::uint32_t>(s)).complement(n).members();
    auto& lab = label[s];
    lab.assign(count, UINT32_MAX);
    std::uint32_t next = 0;
    for (std::size_t c = 0; c < count; ++c) {
      if (lab[c] != UINT32_MAX) continue;
      lab[c] = next;
      stack.push_back(c);
      while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        for (Colour i : moves) {
          const auto y = g.adj[i][x];
          if (lab[y] == UINT32_MAX) {
            lab[y] = next;
            stack.push_back(y);
          }
        }
      }
      ++next;
    }
  }

  PropertyCertificate cert{"strongly_connected", true, nullptr, ""};
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      std::uint32_t common = 0;
      for (Colour i = 0; i < n; ++i) {
        if (g.chains[a][i + 1] == g.chains[b][i + 1]) common |= (std::uint32_t{1} << i);
      }
      if (label[common][a] != label[common][b]) {
        cert.verdict = false;
        cert.witness = json{{"chain_a", chain_json(p, g.chains[a])},
                            {"chain_b", chain_json(p, g.chains[b])},
                            {"common_ranks", ColourSet(common).members()}};
        return cert;
      }
    }
  }
  cert.witness = json{{"chains", count}};
  return cert;
}

PropertyCertificate is_polytopal(const Maniplex& m) {
  PropertyCertificate cert{"polytopal", false, nullptr, ""};
  const auto faithful = is_faithful(m);
  const auto thin = is_thin(m);
  if (faithful.verdict) {
    cert.route = "faithful+cip";
    if (!thin.verdict) {
      cert.witness = json{{"thin", thin.to_json()}};
      return cert;
    }
    const auto cip = has_cip(m);
    cert.verdict = cip.verdict;
    cert.witness = json{{"cip", cip.to_json()}};
    return cert;
  }
  cert.route = "direct";
  if (!thin.verdict) {
    cert.witness = json{{"thin", thin.to_json()}};
    return cert;
  }
  const auto strong = is_strongly_connected(build_poset(m));
  cert.verdict = strong.verdict;
  cert.witness = json{{"strongly_connected", strong.to_json()}};
  return cert;
}

Maniplex man_from_poset(const FlaggedPoset& p) {
  if (!is_thin(p).verdict) throw NotThin("Man(P) requires a thin poset");
  const auto g = chain_graph(p);
  std::vector<std::vector<Flag>> adj(p.rank(), std::vector<Flag>(g.chains.size()));
  for (Colour i = 0; i < p.rank(); ++i) {
    for (std::size_t c = 0; c < g.chains.size(); ++c) adj[i][c] = static_cast<Flag>(g.adj[i][c]);
  }
  try {
    return validate(ColouredGraph(p.rank(), std::move(adj)));
  } catch (const ValidationError& e) {
    throw NotManiplex(e);
  }
}

}  // namespace maniforge
