#include "corpus.hpp"

#include "kleinsig/generators.hpp"
#include "kleinsig/transform.hpp"

namespace kleinsig {

namespace {

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> c;
  auto add = [&](const std::string& family, std::vector<int> params) {
    Generated g = generate(family, params);
    c.push_back({g.d.name(), g.d, g.script});
  };
  add("trivial-theta", {});
  add("tetrahedron", {});
  add("prism", {});
  for (int n = 1; n <= 4; ++n) add("theta-n", {n});
  add("kinoshita", {0, 0, 0});
  add("kinoshita", {1, 1, 1});
  add("kinoshita", {1, 1, 3});
  add("kinoshita", {1, 3, 5});
  add("kinoshita", {-1, 2, 1});
  add("torus2k", {1});
  add("torus2k", {2});
  add("theta-kink", {});
  add("two-theta", {});
  add("theta-sum2", {});
  add("tet-sum2", {});

  auto theta1 = gen_theta_n(1).d;
  auto tet = gen_tetrahedron();
  auto s3 = vertex_sum(theta1, vertex_nodes(theta1)[0], tet, vertex_nodes(tet)[0]).d;
  s3.set_name("theta-n-1-sum3-tet");
  c.push_back({s3.name(), s3, std::nullopt});
  auto k = gen_kinoshita(1, 1, 1);
  auto red = [](const ColoredDiagram& d) {
    int e = 0;
    while (d.edges()[e].color != Color::r) ++e;
    return e;
  };
  auto s2 = edge_sum(theta1, red(theta1), k, red(k)).d;
  s2.set_name("theta-n-1-sum2-kinoshita");
  c.push_back({s2.name(), s2, std::nullopt});
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& generator_corpus() {
  static const std::vector<CorpusEntry> corpus = build();
  return corpus;
}

}  // namespace kleinsig
