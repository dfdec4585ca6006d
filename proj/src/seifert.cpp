#include "kleinsig/seifert.hpp"

#include <numeric>
#include <json.hpp>

namespace kleinsig {

SeifertData seifert_matrix(const BraidWord& w) {
  struct Gen {
    int index;  // 1-based generator index of the letters
    int a1, a2;  // positions of the two letters in the word
  };
  std::vector<Gen> gens;
  for (int i = 1; i < w.strands; ++i) {
    int last = -1;
    for (int p = 0; p < static_cast<int>(w.letters.size()); ++p) {
      if (std::abs(w.letters[p]) != i) continue;
      if (last >= 0) gens.push_back({i, last, p});
      last = p;
    }
  }
  const int m = static_cast<int>(gens.size());
  SeifertData s;
  s.V = IntMatrix(m);
  auto positive = [&](int p) { return w.letters[p] > 0; };
  for (int g = 0; g < m; ++g) {
    const Gen& x = gens[g];
    bool p1 = positive(x.a1), p2 = positive(x.a2);
    if (p1 && p2) s.V(g, g) = -1;
    else if (!p1 && !p2) s.V(g, g) = 1;
    for (int h = 0; h < m; ++h) {
      if (h == g) continue;
      const Gen& y = gens[h];
      if (y.index == x.index && y.a1 == x.a2) {
        // consecutive on one band column, sharing the letter at x.a2
        if (positive(x.a2)) s.V(g, h) = 1;
        else s.V(h, g) = -1;
      } else if (y.index == x.index + 1) {
        if (x.a1 < y.a1 && y.a1 < x.a2 && x.a2 < y.a2) s.V(g, h) = -1;
        else if (y.a1 < x.a1 && x.a1 < y.a2 && y.a2 < x.a2) s.V(g, h) = 1;
      }
    }
  }
  // Seifert graph components: strands joined by letters
  std::vector<int> parent(w.strands);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int l : w.letters) {
    int i = std::abs(l) - 1;
    parent[find(i)] = find(i + 1);
  }
  s.r = 0;
  for (int v = 0; v < w.strands; ++v) s.r += find(v) == v ? 1 : 0;
  return s;
}

LinkSignatureBundle signature_nullity(const SeifertData& s, int split_extra, int mu) {
  SignatureResult r = symmetric_signature(s.V + s.V.transpose());
  return {r.signature(), r.nullity() + (s.r - 1) + split_extra, mu};
}

LinkSignatureBundle link_signature(const OrientedLinkDiagram& o) {
  LinkSignatureBundle out{0, 0, 0};
  auto pieces = split_decompose(o);
  for (const auto& piece : pieces) {
    BraidWord w = to_braid(piece);
    LinkSignatureBundle b = signature_nullity(seifert_matrix(w), 0, piece.base.component_count());
    out.sigma += b.sigma;
    out.beta += b.beta;
    out.mu += b.mu;
  }
  out.beta += static_cast<int>(pieces.size()) - 1;
  return out;
}

std::string seifert_debug_json(const SeifertData& s) {
  nlohmann::json j;
  j["r"] = s.r;
  auto V = nlohmann::json::array();
  for (int i = 0; i < s.V.size(); ++i) {
    auto row = nlohmann::json::array();
    for (int k = 0; k < s.V.size(); ++k) row.push_back(s.V(i, k));
    V.push_back(row);
  }
  j["V"] = V;
  auto diag = nlohmann::json::array();
  for (const auto& q : symmetric_signature(s.V + s.V.transpose()).diagonal)
    diag.push_back({{"num", boost::multiprecision::numerator(q).str()},
                    {"den", boost::multiprecision::denominator(q).str()}});
  j["diagonal"] = diag;
  return j.dump();
}

}  // namespace kleinsig
