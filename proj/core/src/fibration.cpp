#include "halfmmp/fibration.hpp"

#include <algorithm>
#include <set>

#include "halfmmp/error.hpp"
#include "halfmmp/invariants.hpp"

namespace halfmmp {

namespace {

Finding rel(std::string check, std::string loc, long lhs, const char* op, long rhs, std::string cite,
            std::map<std::string, std::string> inputs) {
  Finding f;
  f.check = std::move(check);
  f.location = std::move(loc);
  f.lhs = std::to_string(lhs);
  f.relation = op;
  f.rhs = std::to_string(rhs);
  const bool ok = std::string(op) == "=" ? lhs == rhs : lhs <= rhs;
  f.verdict = ok ? Verdict::Pass : Verdict::Fail;
  f.citation = std::move(cite);
  f.inputs = std::move(inputs);
  return f;
}

std::string cid(ComponentId c) { return "C" + std::to_string(to_int(c)); }

}  // namespace

std::optional<int> open_euler_characteristic(const FiberGraph& f) {
  if (f.l_f_in_boundary) return std::nullopt;
  const DivisorGraph& g = f.graph;
  std::set<std::size_t> pts;
  for (std::size_t i : g.points_on(f.l_f)) {
    const auto& p = g.points()[i];
    if (std::any_of(p.comps.begin(), p.comps.end(), [&](ComponentId c) { return c != f.l_f; })) pts.insert(i);
  }
  return 2 - static_cast<int>(pts.size());
}

std::vector<Finding> check_fiber(const FiberGraph& fb, const std::string& loc) {
  const DivisorGraph& g = fb.graph;
  if (!g.has(fb.l_f)) throw Error(ErrorCode::MalformedFiber, "L_f is not a component of the fiber graph");
  if (contains(fb.horizontal, fb.l_f)) throw Error(ErrorCode::MalformedFiber, "L_f is marked horizontal");
  const Subdivisor fiber = set_minus(make_subdivisor(g.ids()), fb.horizontal);
  if (!is_connected(g, fiber) || !is_tree(g, fiber) || !is_snc(g, fiber))
    throw Error(ErrorCode::MalformedFiber, "fiber is not an snc tree");
  for (ComponentId c : fiber)
    if (c != fb.l_f && g.self_int(c) == -1)
      throw Error(ErrorCode::MalformedFiber, "fiber has a second (-1)-curve " + cid(c));
  if (g.self_int(fb.l_f) != -1) throw Error(ErrorCode::MalformedFiber, "L_f is not a (-1)-curve");

  const char* cite = "a singular fiber is [2,2,2] with L_f on the middle (-2)-curve; H meets only the ends and L_f";
  Finding f;
  f.check = "fibration.fiber_shape";
  f.location = loc;
  f.citation = cite;
  f.relation = "is";
  f.rhs = "[2,2,2] + L_f on the middle";
  const Subdivisor rest = set_minus(fiber, Subdivisor{fb.l_f});
  auto chain = as_chain(g, rest);
  std::string shape;
  auto show = [&](const std::vector<ComponentId>& ch) {
    std::string out = "[";
    for (std::size_t i = 0; i < ch.size(); ++i) out += (i ? "," : "") + std::to_string(-g.self_int(ch[i]));
    return out + "]";
  };
  std::string problem;
  if (auto whole = as_chain(g, fiber); whole && whole->size() == 3 && (*whole)[1] == fb.l_f) {
    shape = show(*whole);
    problem = "L_f is the middle of a chain";
  } else if (!chain || chain->size() != 3) {
    shape = "F - L_f has " + std::to_string(rest.size()) + " components" + (chain ? "" : ", not a chain");
    problem = "F - L_f is not a chain of length 3";
  } else {
    shape = show(*chain) + " + L_f";
    const auto& ch = *chain;
    if (std::any_of(ch.begin(), ch.end(), [&](ComponentId c) { return g.self_int(c) != -2; }))
      problem = "F - L_f is not made of (-2)-curves";
    else if (g.intersection(fb.l_f, ch[1]) != 1 || g.intersection(fb.l_f, ch[0]) != 0 ||
             g.intersection(fb.l_f, ch[2]) != 0)
      problem = "L_f does not meet the middle curve alone";
    else {
      for (ComponentId h : fb.horizontal)
        if (g.intersection(h, ch[1]) != 0) problem = "horizontal curve " + cid(h) + " meets the middle curve";
      bool l_meets_h = false;
      for (ComponentId h : fb.horizontal) l_meets_h |= g.intersection(h, fb.l_f) > 0;
      if (problem.empty() && !l_meets_h) problem = "no horizontal curve meets L_f";
    }
  }
  f.lhs = shape;
  f.verdict = problem.empty() ? Verdict::Pass : Verdict::Fail;
  f.note = problem;
  f.inputs["shape"] = shape;
  f.inputs["horizontal"] = std::to_string(fb.horizontal.size());
  std::vector<Finding> out = {f};
  if (problem.empty()) {
    // Fiber multiplicities: ends 1, middle and L_f 2. A general fiber is P^1 minus three points.
    const auto& ch = *chain;
    long deg = 0;
    for (ComponentId h : fb.horizontal)
      deg += g.intersection(h, ch[0]) + g.intersection(h, ch[2]) + 2 * g.intersection(h, ch[1]) +
             2 * g.intersection(h, fb.l_f);
    out.push_back(rel("fibration.fiber_degree", loc, deg, "=", 3, "the horizontal boundary meets a fiber in 3 points",
                      {{"H.f", std::to_string(deg)}}));
  }
  return out;
}

std::vector<Finding> check_fibration(const FibrationData& d) {
  std::vector<Finding> out;
  const std::string loc = "fibration(h=" + std::to_string(d.h) + ",n=" + std::to_string(d.n) + ")";
  const std::map<std::string, std::string> in = {{"h", std::to_string(d.h)},
                                                 {"nu", std::to_string(d.nu)},
                                                 {"sigma", std::to_string(d.sigma)},
                                                 {"n", std::to_string(d.n)}};
  out.push_back(rel("fibration.nu", loc, d.nu, "=", d.n + 2 - d.h, "nu = n + 2 - h", in));
  out.push_back(rel("fibration.sigma", loc, d.sigma, "=", d.h + 1 - d.n, "sigma = h + 1 - n", in));
  {
    long sum = 0;
    for (int chi : d.open_fiber_euler) sum += chi + 1;
    const long rhs = -(2 - d.nu) + sum;
    auto inputs = in;
    inputs["#singular open fibers"] = std::to_string(d.open_fiber_euler.size());
    inputs["sum(chi(F_s) + 1)"] = std::to_string(sum);
    out.push_back(rel("fibration.suzuki", loc, 1, "=", rhs, "1 = (2 - nu)(-1) + sum(chi(F_s) + 1)", inputs));
    out.push_back(rel("fibration.open_fiber_count", loc, static_cast<long>(d.open_fiber_euler.size()), "=", d.sigma,
                      "sigma counts the singular fibers of the open part", inputs));
  }
  for (std::size_t i = 0; i < d.fibers.size(); ++i) {
    const std::string floc = loc + ":fiber" + std::to_string(i);
    auto v = check_fiber(d.fibers[i], floc);
    out.insert(out.end(), v.begin(), v.end());
    if (auto chi = open_euler_characteristic(d.fibers[i]))
      out.push_back(rel("fibration.fiber_open_part", floc, *chi, "=", 0,
                        "the open part of a singular fiber is C^*, chi(F_s) = 0", {{"chi", std::to_string(*chi)}}));
  }
  if (d.cusps)
    out.push_back(rel("fibration.cusps", loc, *d.cusps, "<=", 3,
                      "with a structural C**-fibration the curve has at most three cusps",
                      {{"c", std::to_string(*d.cusps)}}));
  return out;
}

FiberGraph standard_fiber() {
  FiberGraph f;
  DivisorGraph& g = f.graph;
  ComponentId t1 = g.add_component(-2, Role::Exceptional, "T1");
  ComponentId m = g.add_component(-2, Role::Exceptional, "M");
  ComponentId t2 = g.add_component(-2, Role::Exceptional, "T2");
  f.l_f = g.add_component(-1, Role::Auxiliary, "L_f");
  ComponentId h1 = g.add_component(-1, Role::Exceptional, "H1");
  ComponentId h2 = g.add_component(-1, Role::Exceptional, "H2");
  g.connect(t1, m);
  g.connect(m, t2);
  g.connect(m, f.l_f);
  g.connect(h1, t1);
  g.connect(h2, f.l_f);
  f.horizontal = make_subdivisor({h1, h2});
  return f;
}

FibrationData generate_fibration(int h, int n) {
  FibrationData d;
  d.h = h;
  d.n = n;
  d.nu = n + 2 - h;
  d.sigma = h + 1 - n;
  for (int i = 0; i < d.sigma; ++i) {
    d.fibers.push_back(standard_fiber());
    d.open_fiber_euler.push_back(*open_euler_characteristic(d.fibers.back()));
  }
  return d;
}

}  // namespace halfmmp
