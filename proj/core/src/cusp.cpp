#include "halfmmp/cusp.hpp"

#include <algorithm>
#include <sstream>

#include "halfmmp/error.hpp"

namespace halfmmp {

long CuspDescriptor::delta_invariant() const {
  long d = 0;
  for (int m : multiplicity_sequence) d += static_cast<long>(m) * (m - 1) / 2;
  return d;
}

bool CuspDescriptor::semi_ordinary() const {
  return !multiplicity_sequence.empty() &&
         std::all_of(multiplicity_sequence.begin(), multiplicity_sequence.end(), [](int m) { return m == 2; });
}

bool CuspDescriptor::ordinary() const { return multiplicity_sequence == std::vector<int>{2}; }

namespace {

std::string seq_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

[[noreturn]] void inadmissible(const CuspDescriptor& c, const std::string& why) {
  throw Error(ErrorCode::InadmissibleSequence, seq_str(c.multiplicity_sequence) + ": " + why);
}

}  // namespace

CuspResolutionReport simulate_cusp_resolution(const CuspDescriptor& c) {
  const auto& seq = c.multiplicity_sequence;
  if (seq.empty()) inadmissible(c, "empty multiplicity sequence");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 2) inadmissible(c, "multiplicities must be >= 2");
    if (i && seq[i] > seq[i - 1]) inadmissible(c, "sequence must be non-increasing");
  }
  CuspResolutionReport r;
  r.cusp = c;
  std::vector<int>& m = r.multiplicities;
  std::vector<std::vector<int>>& prox = r.proximate;
  m = seq;
  const std::size_t k = seq.size();
  prox.assign(1, {});

  // Proximity equality for a unibranch germ: m_i is the sum of the multiplicities
  // of the points proximate to p_i, and those points follow p_i consecutively.
  std::size_t n_points = 0;
  for (std::size_t i = 0;; ++i) {
    if (i > 4096) inadmissible(c, "resolution does not terminate");
    int sum = 0;
    std::size_t j = i + 1;
    while (sum < m[i]) {
      if (j >= m.size()) m.push_back(1);
      if (prox.size() <= j) prox.resize(j + 1);
      sum += m[j];
      prox[j].push_back(static_cast<int>(i));
      ++j;
    }
    if (sum > m[i]) inadmissible(c, "proximity equality fails at point " + std::to_string(i + 1));
    if (prox.size() <= i + 1) prox.resize(i + 2);
    if (i + 1 >= k && m[i] == 1 && prox[i + 1] == std::vector<int>{static_cast<int>(i)}) {
      n_points = i + 1;
      break;
    }
  }
  m.resize(n_points);
  prox.resize(n_points);

  DivisorGraph& q = r.q;
  for (std::size_t j = 0; j < n_points; ++j) {
    auto& pj = prox[j];
    std::sort(pj.begin(), pj.end());
    if (pj.size() > 2) inadmissible(c, "point " + std::to_string(j + 1) + " is proximate to three curves");
    ComponentId x = q.add_component(-1, Role::Exceptional);
    for (int i : pj) q.set_self_int(r.order[i], q.self_int(r.order[i]) - 1);
    if (pj.size() == 2) {
      ComponentId a = r.order[pj[0]], b = r.order[pj[1]];
      if (pj[1] != static_cast<int>(j) - 1) inadmissible(c, "satellite point off the last exceptional curve");
      std::optional<std::size_t> meet;
      for (std::size_t idx = 0; idx < q.points().size(); ++idx)
        if (q.points()[idx].contains(a) && q.points()[idx].contains(b)) meet = idx;
      if (!meet) inadmissible(c, "satellite point is not an intersection of exceptional curves");
      q.remove_point(*meet);
      q.connect(a, x);
      q.connect(b, x);
    } else if (pj.size() == 1) {
      if (pj[0] != static_cast<int>(j) - 1) inadmissible(c, "free point off the last exceptional curve");
      q.connect(r.order[pj[0]], x);
    }
    r.order.push_back(x);
  }
  r.l = r.order.back();
  r.weak_blowups = static_cast<int>(k);
  for (int v : m) r.self_int_drop += static_cast<long>(v) * v;

  // Local weak resolution: contract the log-stage curves, last first.
  DivisorGraph local = q;
  ComponentId e = local.add_component(0, Role::E, "E");
  local.connect(e, r.l);
  SurfaceState st(local, 1 + static_cast<int>(n_points), e);
  for (std::size_t j = n_points; j-- > k;) {
    st = blow_down(st, r.order[j]);
    const BirationalMove& mv = st.history().back();
    bool touches_e = false;
    int others = 0;
    for (ComponentId b : mv.center_components) {
      if (b == e)
        touches_e = true;
      else
        ++others;
    }
    r.tau += touches_e;
    if (others == 1) r.s = 1;
  }
  r.tau_star = r.tau - r.s - 1;
  return r;
}

Resolutions build_resolutions(const CurveDescriptor& curve) {
  if (curve.degree < 1) throw Error(ErrorCode::GenusFormulaViolated, "degree must be positive");
  long delta = 0;
  for (const auto& c : curve.cusps) delta += c.delta_invariant();
  const long genus_rhs = static_cast<long>(curve.degree - 1) * (curve.degree - 2) / 2;
  if (delta != genus_rhs)
    throw Error(ErrorCode::GenusFormulaViolated, curve.name + ": sum of delta invariants " + std::to_string(delta) +
                                                     " != (d-1)(d-2)/2 = " + std::to_string(genus_rhs));
  Resolutions out;
  long drop = 0;
  for (const auto& c : curve.cusps) {
    out.cusps.push_back(simulate_cusp_resolution(c));
    drop += out.cusps.back().self_int_drop;
  }
  DivisorGraph g;
  out.e = g.add_component(static_cast<int>(static_cast<long>(curve.degree) * curve.degree - drop), Role::E, "E");
  int rho = 1;
  for (std::size_t j = 0; j < out.cusps.size(); ++j) {
    const auto& rep = out.cusps[j];
    std::map<ComponentId, ComponentId> f;
    std::vector<ComponentId> ids;
    for (std::size_t i = 0; i < rep.order.size(); ++i) {
      ComponentId src = rep.order[i];
      ComponentId dst =
          g.add_component(rep.q.self_int(src), Role::Exceptional, "q" + std::to_string(j + 1) + "." + std::to_string(i + 1));
      f[src] = dst;
      ids.push_back(dst);
    }
    for (const auto& p : rep.q.points()) {
      std::vector<ComponentId> comps;
      for (ComponentId c : p.comps) comps.push_back(f.at(c));
      g.add_point(comps, p.contacts);
    }
    g.connect(out.e, f.at(rep.l));
    rho += static_cast<int>(rep.order.size());
    out.cusp_components.push_back(std::move(ids));
  }
  out.log = SurfaceState(g, rho, out.e);
  SurfaceState w = out.log;
  for (std::size_t j = 0; j < out.cusps.size(); ++j) {
    const auto& ids = out.cusp_components[j];
    for (std::size_t i = ids.size(); i-- > static_cast<std::size_t>(out.cusps[j].weak_blowups);) w = blow_down(w, ids[i]);
  }
  out.weak = w;
  return out;
}

SurfaceState build_log_resolution(const CurveDescriptor& curve) { return build_resolutions(curve).log; }
SurfaceState build_weak_resolution(const CurveDescriptor& curve) { return build_resolutions(curve).weak; }

std::vector<Finding> validate_curve(const CurveDescriptor& curve) {
  std::vector<Finding> out;
  const std::string loc = curve.name.empty() ? "curve" : curve.name;
  {
    Finding f;
    f.check = "curve.degree";
    f.location = loc;
    f.lhs = std::to_string(curve.degree);
    f.relation = ">=";
    f.rhs = "3";
    f.citation = "rational cuspidal plane curve of degree >= 3";
    f.verdict = curve.degree >= 3 ? Verdict::Pass : Verdict::Fail;
    out.push_back(f);
  }
  {
    long delta = 0;
    for (const auto& c : curve.cusps) delta += c.delta_invariant();
    Finding f;
    f.check = "curve.genus_formula";
    f.location = loc;
    f.lhs = std::to_string(delta);
    f.relation = "=";
    f.rhs = std::to_string(static_cast<long>(curve.degree - 1) * (curve.degree - 2) / 2);
    f.citation = "sum_j m(m-1)/2 = (d-1)(d-2)/2";
    f.verdict = f.lhs == f.rhs ? Verdict::Pass : Verdict::Fail;
    f.inputs["degree"] = std::to_string(curve.degree);
    for (std::size_t j = 0; j < curve.cusps.size(); ++j)
      f.inputs["cusp" + std::to_string(j + 1)] = seq_str(curve.cusps[j].multiplicity_sequence);
    out.push_back(f);
  }
  for (std::size_t j = 0; j < curve.cusps.size(); ++j) {
    Finding f;
    f.check = "curve.admissible_sequence";
    f.location = loc + "/cusp" + std::to_string(j + 1);
    f.lhs = seq_str(curve.cusps[j].multiplicity_sequence);
    f.relation = "admissible";
    f.citation = "proximity equalities of a unibranch germ";
    try {
      simulate_cusp_resolution(curve.cusps[j]);
      f.verdict = Verdict::Pass;
    } catch (const Error& e) {
      f.verdict = Verdict::Fail;
      f.note = e.what();
    }
    out.push_back(f);
  }
  if (curve.degree == 3 && curve.metadata.log_general_type.value_or(false)) {
    Finding f;
    f.check = "curve.cubic_log_general_type";
    f.location = loc;
    f.verdict = Verdict::Fail;
    f.advisory = true;
    f.lhs = "deg(2K_P2 + E) = -3";
    f.relation = ">=";
    f.rhs = "0";
    f.citation = "2K_P2 + E = pi_*(2K_X + D) >= 0 fails for a cubic";
    f.note = "a cuspidal cubic cannot have a complement of log general type";
    out.push_back(f);
  }
  return out;
}

}  // namespace halfmmp
