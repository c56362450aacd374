#include "symq/good_involutions.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace symq {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool mapping_less(const GoodInvolution& a, const GoodInvolution& b) {
  return a.mapping < b.mapping;
}

// Precomputed search tables for one (ctx, S) pair, shared read-only
// across workers.
struct TheoremPrep {
  const TwistedConjContext* ctx;
  std::vector<int> s_list;  // ambient indices, ascending
  int m = 0;                // carrier size (local)
  int nc = 0;               // component count
  int ns = 0;               // |S|
  std::vector<int> comp_of;
  // rho_tbl[ti][x] = local index of phi(x^-1) * s_list[ti], or -1 if the
  // image leaves the carrier.
  std::vector<std::vector<int>> rho_tbl;
  std::vector<std::vector<char>> valid;            // [c][ti]
  std::vector<std::vector<std::vector<int>>> forced;  // [c][ti] -> comp ids
};

TheoremPrep prepare(const TwistedConjContext& ctx, std::vector<int> s_list) {
  TheoremPrep prep;
  prep.ctx = &ctx;
  prep.s_list = std::move(s_list);
  prep.m = static_cast<int>(ctx.carrier.size());
  const auto& comps = ctx.quandle.components();
  prep.nc = static_cast<int>(comps.components.size());
  prep.ns = static_cast<int>(prep.s_list.size());
  prep.comp_of = comps.component_of;

  const FiniteGroup& g = *ctx.ambient;
  std::vector<int> base(prep.m);  // phi(x^-1) per local element
  for (int x = 0; x < prep.m; ++x)
    base[x] = ctx.phi(g.inverse(ctx.carrier[x]));

  prep.rho_tbl.assign(prep.ns, std::vector<int>(prep.m));
  for (int ti = 0; ti < prep.ns; ++ti) {
    int t = prep.s_list[ti];
    for (int x = 0; x < prep.m; ++x)
      prep.rho_tbl[ti][x] = ctx.local_of[g.op(base[x], t)];
  }

  prep.valid.assign(prep.nc, std::vector<char>(prep.ns, 1));
  prep.forced.assign(prep.nc, std::vector<std::vector<int>>(prep.ns));
  for (int c = 0; c < prep.nc; ++c) {
    for (int ti = 0; ti < prep.ns; ++ti) {
      std::vector<int> targets;
      for (int x : comps.components[c]) {
        int r = prep.rho_tbl[ti][x];
        if (r < 0) {
          prep.valid[c][ti] = 0;
          break;
        }
        targets.push_back(prep.comp_of[r]);
      }
      if (!prep.valid[c][ti]) continue;
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      prep.forced[c][ti] = std::move(targets);
    }
  }
  return prep;
}

struct TheoremWorker {
  const TheoremPrep& prep;
  const EnumerateOptions& opts;
  Clock::time_point deadline;
  bool has_deadline;
  std::atomic<bool>* stop;

  std::vector<int> assigned;  // comp -> ti, -1 unassigned
  std::vector<int> trail;
  std::uint64_t nodes = 0;
  std::uint64_t count = 0;
  std::vector<GoodInvolution>* out;  // nullptr in count-only mode

  TheoremWorker(const TheoremPrep& p, const EnumerateOptions& o,
                Clock::time_point dl, bool has_dl, std::atomic<bool>* st,
                std::vector<GoodInvolution>* sink)
      : prep(p), opts(o), deadline(dl), has_deadline(has_dl), stop(st),
        assigned(p.nc, -1), out(sink) {}

  void tick() {
    ++nodes;
    if (has_deadline && (nodes & 1023) == 0 && Clock::now() > deadline)
      throw budget_error("enumeration time budget exceeded");
  }

  // Assigns component c the value ti and propagates psi = psi rho through
  // the components hit by rho images. Appends every assignment to the
  // trail; returns false on conflict (caller unwinds via the trail).
  bool assign(int c, int ti) {
    tick();
    std::size_t start = trail.size();
    assigned[c] = ti;
    trail.push_back(c);
    for (std::size_t i = start; i < trail.size(); ++i) {
      int d = trail[i];
      if (!prep.valid[d][ti]) return false;
      for (int e : prep.forced[d][ti]) {
        if (assigned[e] == -1) {
          assigned[e] = ti;
          trail.push_back(e);
        } else if (assigned[e] != ti) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail.size() > mark) {
      assigned[trail.back()] = -1;
      trail.pop_back();
    }
  }

  void emit() {
    std::vector<int> rho(prep.m);
    for (int x = 0; x < prep.m; ++x)
      rho[x] = prep.rho_tbl[assigned[prep.comp_of[x]]][x];
    if (!verify_good_involution(prep.ctx->quandle, rho)) return;
    ++count;
    if (out) {
      if (out->size() >= opts.mapping_cap)
        throw budget_error("mapping cap exceeded");
      std::vector<int> psi(prep.nc);
      for (int c = 0; c < prep.nc; ++c) psi[c] = prep.s_list[assigned[c]];
      out->push_back(GoodInvolution{std::move(rho), std::move(psi)});
    }
    if (opts.solution_limit && count >= opts.solution_limit)
      stop->store(true, std::memory_order_relaxed);
  }

  void run(int from) {
    if (stop->load(std::memory_order_relaxed)) return;
    int c = from;
    while (c < prep.nc && assigned[c] != -1) ++c;
    if (c == prep.nc) {
      emit();
      return;
    }
    for (int ti = 0; ti < prep.ns; ++ti) {
      std::size_t mark = trail.size();
      if (assign(c, ti)) run(c + 1);
      undo(mark);
      if (stop->load(std::memory_order_relaxed)) return;
    }
  }
};

GoodInvolutionSet enumerate_with_s(const TwistedConjContext& ctx,
                                   std::vector<int> s_list,
                                   const EnumerateOptions& opts,
                                   Method method) {
  auto start = Clock::now();
  TheoremPrep prep = prepare(ctx, std::move(s_list));

  bool has_deadline = opts.time_budget_seconds > 0;
  auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(
                                  opts.time_budget_seconds));
  std::atomic<bool> stop{false};

  GoodInvolutionSet result;
  result.method = method;
  if (prep.ns == 0) {
    if (opts.collect_mappings) result.mappings.emplace();
    result.stats.wall_seconds = seconds_since(start);
    return result;
  }

  int workers = std::max(1, opts.workers);
  if (opts.solution_limit) workers = 1;  // early-exit path stays sequential
  workers = std::min(workers, prep.ns);

  std::vector<std::vector<GoodInvolution>> sinks(workers);
  std::vector<std::uint64_t> counts(workers, 0), node_counts(workers, 0);
  std::vector<std::exception_ptr> errors(workers);

  // Shards the top-level S-choice of the first component; each worker
  // owns a disjoint subtree, so the merge below is deterministic.
  auto work = [&](int w) {
    try {
      TheoremWorker search(prep, opts, deadline, has_deadline, &stop,
                           opts.collect_mappings ? &sinks[w] : nullptr);
      for (int ti = w; ti < prep.ns; ti += workers) {
        std::size_t mark = search.trail.size();
        if (search.assign(0, ti)) search.run(1);
        search.undo(mark);
        if (stop.load(std::memory_order_relaxed)) break;
      }
      counts[w] = search.count;
      node_counts[w] = search.nodes;
    } catch (...) {
      errors[w] = std::current_exception();
      stop.store(true, std::memory_order_relaxed);
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);

  for (int w = 0; w < workers; ++w) {
    result.count += counts[w];
    result.stats.nodes += node_counts[w];
  }
  if (opts.collect_mappings) {
    result.mappings.emplace();
    for (auto& sink : sinks)
      for (auto& gi : sink) result.mappings->push_back(std::move(gi));
    if (result.mappings->size() > opts.mapping_cap)
      throw budget_error("mapping cap exceeded");
    std::sort(result.mappings->begin(), result.mappings->end(), mapping_less);
  }
  result.stats.wall_seconds = seconds_since(start);
  return result;
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::theorem: return "theorem";
    case Method::closed_form: return "closed-form";
  }
  return "?";
}

DispatchMethod parse_dispatch(const std::string& name) {
  if (name == "auto") return DispatchMethod::automatic;
  if (name == "brute") return DispatchMethod::brute;
  if (name == "theorem") return DispatchMethod::theorem;
  if (name == "both") return DispatchMethod::both;
  throw input_error("unknown method: " + name);
}

bool verify_good_involution(const Quandle& q, const std::vector<int>& rho) {
  const int n = q.order();
  if (rho.size() != static_cast<std::size_t>(n))
    throw shape_error("involution table length does not match quandle order");
  std::vector<char> seen(n, 0);
  for (int v : rho) {
    if (v < 0 || v >= n) throw shape_error("involution entry out of range");
    if (seen[v]) throw shape_error("involution table is not a bijection");
    seen[v] = 1;
  }
  for (int x = 0; x < n; ++x)
    if (rho[rho[x]] != x) return false;
  for (int x = 0; x < n; ++x) {
    // s_{rho(x)} = s_x^-1
    const auto& srx = q.sym(rho[x]);
    const auto& sx = q.sym(x);
    for (int y = 0; y < n; ++y)
      if (srx[sx[y]] != y) return false;
    // rho s_x = s_x rho
    for (int y = 0; y < n; ++y)
      if (rho[sx[y]] != sx[rho[y]]) return false;
  }
  return true;
}

GoodInvolutionSet enumerate_brute(const Quandle& q,
                                  const EnumerateOptions& opts,
                                  int brute_ceiling) {
  const int n = q.order();
  if (n > brute_ceiling)
    throw budget_error("order " + std::to_string(n) +
                       " above brute ceiling " + std::to_string(brute_ceiling));
  auto start = Clock::now();

  // cand[x] = {y : s_y = s_x^-1}; rho(x) must land there.
  std::vector<std::vector<int>> inv_sym(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) inv_sym[x][q.apply(x, y)] = y;
  std::vector<std::vector<int>> cand(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (q.sym(y) == inv_sym[x]) cand[x].push_back(y);

  GoodInvolutionSet result;
  result.method = Method::brute;
  if (opts.collect_mappings) result.mappings.emplace();

  std::vector<int> rho(n, -1);
  std::uint64_t nodes = 0;
  auto emit = [&]() {
    if (!verify_good_involution(q, rho)) return;
    ++result.count;
    if (result.mappings) {
      if (result.mappings->size() >= opts.mapping_cap)
        throw budget_error("mapping cap exceeded");
      result.mappings->push_back(GoodInvolution{rho, std::nullopt});
    }
  };
  auto search = [&](auto&& self, int from) -> void {
    int x = from;
    while (x < n && rho[x] != -1) ++x;
    if (x == n) {
      emit();
      return;
    }
    for (int y : cand[x]) {
      if (rho[y] != -1) continue;
      ++nodes;
      rho[x] = y;
      rho[y] = x;
      self(self, x + 1);
      rho[x] = rho[y] = -1;
    }
  };
  search(search, 0);

  if (result.mappings)
    std::sort(result.mappings->begin(), result.mappings->end(), mapping_less);
  result.stats.nodes = nodes;
  result.stats.wall_seconds = seconds_since(start);
  return result;
}

GoodInvolutionSet enumerate_theorem(const TwistedConjContext& ctx,
                                    const EnumerateOptions& opts) {
  return enumerate_with_s(ctx, ctx.s_set, opts, Method::theorem);
}

GoodInvolutionSet enumerate_alexander(const TwistedConjContext& ctx,
                                      const EnumerateOptions& opts) {
  if (!ctx.ambient->is_abelian())
    throw domain_error("Alexander enumeration requires an abelian group");
  if (!ctx.carrier_is_whole_group())
    throw domain_error("Alexander shortcut applies to the full quandle only");
  // S = Fix phi when phi is an involution, empty otherwise.
  std::vector<int> s_list;
  if (ctx.phi.is_involution()) s_list = fixed_points(ctx.phi);
  return enumerate_with_s(ctx, std::move(s_list), opts, Method::theorem);
}

GoodInvolutionSet enumerate_alexander(int n, long long k,
                                      const EnumerateOptions& opts) {
  return enumerate_alexander(linear_context(n, k), opts);
}

namespace {

GoodInvolutionSet run_both(const TwistedConjContext& ctx,
                           const EnumerateOptions& opts, int brute_ceiling) {
  EnumerateOptions collecting = opts;
  collecting.collect_mappings = true;
  GoodInvolutionSet brute = enumerate_brute(ctx.quandle, collecting,
                                            brute_ceiling);
  GoodInvolutionSet theorem = enumerate_theorem(ctx, collecting);
  bool same = brute.count == theorem.count;
  if (same)
    for (std::size_t i = 0; i < brute.mappings->size(); ++i)
      if ((*brute.mappings)[i].mapping != (*theorem.mappings)[i].mapping) {
        same = false;
        break;
      }
  if (!same)
    throw inconsistency_error(brute.count, theorem.count,
                              "brute and theorem enumerations disagree");
  if (!opts.collect_mappings) theorem.mappings.reset();
  return theorem;
}

}  // namespace

GoodInvolutionSet count_good(const TwistedConjContext& ctx,
                             DispatchMethod method,
                             const EnumerateOptions& opts, int brute_ceiling) {
  switch (method) {
    case DispatchMethod::automatic:
    case DispatchMethod::theorem:
      return enumerate_theorem(ctx, opts);
    case DispatchMethod::brute:
      return enumerate_brute(ctx.quandle, opts, brute_ceiling);
    case DispatchMethod::both:
      return run_both(ctx, opts, brute_ceiling);
  }
  throw input_error("unknown dispatch method");
}

GoodInvolutionSet count_good(const Quandle& q, DispatchMethod method,
                             const EnumerateOptions& opts, int brute_ceiling) {
  if (method == DispatchMethod::theorem || method == DispatchMethod::both)
    throw contract_error(
        "theorem path needs an ambient twisted-conjugation presentation");
  return enumerate_brute(q, opts, brute_ceiling);
}

}  // namespace symq
