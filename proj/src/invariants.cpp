#include "kleinsig/invariants.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <thread>

#include "kleinsig/linkops.hpp"

namespace kleinsig {

bool SignatureCache::lookup(const std::string& key, LinkSignatureBundle& out) const {
  std::shared_lock lock(m_);
  auto it = map_.find(key);
  if (it == map_.end()) return false;
  out = it->second;
  return true;
}

void SignatureCache::insert(const std::string& key, const LinkSignatureBundle& v) {
  std::unique_lock lock(m_);
  map_.emplace(key, v);
}

std::size_t SignatureCache::size() const {
  std::shared_lock lock(m_);
  return map_.size();
}

void SignatureCache::clear() {
  std::unique_lock lock(m_);
  map_.clear();
}

SignatureCache& global_signature_cache() {
  static SignatureCache cache;
  return cache;
}

std::string link_key(const OrientedLinkDiagram& o) {
  std::ostringstream k;
  k << o.base.component_count() << '|';
  for (int a = 0; a < o.base.arc_count(); ++a) {
    NodeSlot t = o.tail(a), h = o.head(a);
    k << t.node << '.' << t.slot << '>' << h.node << '.' << h.slot << ';';
  }
  return k.str();
}

KleinInvariants compute(const ColoredDiagram& d, const TotalOrientation& t, SignatureCache* cache) {
  check_orientation(d, t);
  KleinInvariants inv;
  inv.name = d.name();
  inv.V = d.vertex_count();
  for (const auto& e : d.edges()) inv.knot_free = inv.knot_free && !e.closed();
  for (ColorPair p : kPairs) {
    OrientedLinkDiagram o = oriented_bicolored(d, t, p);
    LinkSignatureBundle b;
    std::string key;
    bool hit = false;
    if (cache) {
      key = link_key(o);
      hit = cache->lookup(key, b);
    }
    if (!hit) {
      b = link_signature(o);
      if (cache) cache->insert(key, b);
    }
    inv.pairs[index(p)] = b;
    inv.pair_lambda[index(p)] = link_total_linking(o);
    inv.mu += b.mu;
    inv.sigma += b.sigma;
    inv.beta += b.beta;
    inv.lambda += inv.pair_lambda[index(p)];
  }
  inv.zeta = inv.sigma + inv.lambda;
  inv.sv = signed_seam_vertex_count(d, t);
  inv.hamiltonian = inv.pairs[0].mu == 1 && inv.pairs[1].mu == 1 && inv.pairs[2].mu == 1;
  return inv;
}

SweepResult orientation_sweep(const ColoredDiagram& d, unsigned threads, SignatureCache* cache) {
  const std::uint64_t total = orientation_count(d);
  SweepResult res;
  res.rows.resize(total);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_m;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t k = w; k < total; k += threads) {
          TotalOrientation t = orientation_at(d, k);
          res.rows[k] = {t, compute(d, t, cache)};
        }
      } catch (...) {
        std::lock_guard lock(err_m);
        if (!err) err = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  res.min_abs_sigma = res.max_abs_sigma = std::abs(res.rows.front().inv.sigma);
  for (const auto& r : res.rows) {
    res.min_abs_sigma = std::min(res.min_abs_sigma, std::abs(r.inv.sigma));
    res.max_abs_sigma = std::max(res.max_abs_sigma, std::abs(r.inv.sigma));
    res.sigma_constant = res.sigma_constant && r.inv.sigma == res.rows.front().inv.sigma;
  }
  return res;
}

}  // namespace kleinsig
