#include "pipeline.hpp"

#include <algorithm>

namespace towerkit {

namespace {

using containment::Certificate;
using containment::ForceOk;
using containment::ForceResult;
using homeo::FixOk;
using homeo::FixResult;
using poset::Condition;
using poset::Registry;
using poset::RegistryView;

Bits parse_bits(const std::string& s) {
  Bits b;
  b.reserve(s.size());
  for (char c : s) b.push_back(c == '1');
  return b;
}

Tower build_tower(const Scenario& sc) {
  if (!sc.tower_levels.empty()) {
    std::vector<UPSet> levels;
    levels.reserve(sc.tower_levels.size());
    for (const auto& txt : sc.tower_levels) levels.push_back(UPSet::parse(txt));
    if (levels.front() != UPSet::parse(sc.x_text))
      throw ValidationError("scenario: explicit tower must start at the base set");
    try {
      return Tower(std::move(levels), sc.caps.tower);
    } catch (const std::exception& e) {
      throw ValidationError(std::string("scenario: bad explicit tower: ") + e.what());
    }
  }
  Tower t(UPSet::parse(sc.x_text), sc.caps.tower);
  for (const auto& w : sc.tower_prefixes) {
    try {
      t.push_level(parse_bits(w));
    } catch (const std::exception& e) {
      throw ValidationError(std::string("scenario: tower generation failed: ") + e.what());
    }
  }
  return t;
}

uint64_t protect_limit_for(const Scenario& sc) {
  uint64_t max_k = 0;
  bool any = false;
  for (const auto& t : sc.schedule) {
    if (t.kind == TaskKind::MeetContainment) {
      any = true;
      max_k = std::max(max_k, t.arg);
    }
  }
  if (!any) return 0;
  return max_k + 8;  // clear levels land a few positions past the floor
}

}  // namespace

RunOutcome run_scenario(const Scenario& sc) {
  sc.validate();
  RunOutcome out;
  out.scenario = sc;

  out.registry = std::make_unique<Registry>(build_tower(sc));
  Registry& reg = *out.registry;
  reg.set_protect_limit(protect_limit_for(sc));
  RegistryView view(reg);

  for (const auto& spec : sc.b_points) {
    try {
      reg.mint_b_prefix(parse_bits(spec.prefix), spec.color);
    } catch (const std::exception& e) {
      throw ValidationError(std::string("scenario: b-point minting failed: ") + e.what());
    }
  }

  out.poset.present = sc.has_poset_tasks();
  out.homeo.present = sc.has_homeo_tasks();
  homeo::Coloring coloring{sc.colors};

  bool poset_monotone = true;
  bool homeo_monotone = true;
  std::vector<size_t> domain_requests;

  for (const auto& task : sc.schedule) {
    TranscriptEntry entry;
    entry.task = task;
    Condition before = out.poset.cond;
    homeo::HomeoCondition h_before = out.homeo.cond;

    try {
      switch (task.kind) {
        case TaskKind::AddDomain: {
          size_t a = reg.point_for_level(task.arg);
          domain_requests.push_back(a);
          if (out.poset.cond.dom_contains(a)) {
            entry.summary = "already in the domain";
            break;
          }
          poset::Gap gap = out.poset.cond.gap_of(view, reg.a(a).value);
          size_t b = out.poset.cond.extend_in_place(a, gap.image, reg);
          entry.added_pairs.emplace_back(a, b);
          entry.summary = "mapped level " + std::to_string(task.arg);
          break;
        }
        case TaskKind::AddRange: {
          size_t b = task.arg;  // pre-registered ids are schedule-visible
          if (out.poset.cond.range_contains(b)) {
            entry.summary = "already in the range";
            break;
          }
          // locate the gap by image value, then mint a matching domain point
          Rational bv = reg.b(b).value;
          Rational x0(0), x1(1);
          for (const auto& pr : out.poset.cond.pairs()) {
            Rational z = reg.b(pr.b).value;
            if (z < bv) {
              x0 = reg.a(pr.a).value;
            } else {
              x1 = reg.a(pr.a).value;
              break;
            }
          }
          size_t a = reg.mint_a_in(Interval::open(x0, x1));
          out.poset.cond.insert_pair(view, a, b);
          entry.added_pairs.emplace_back(a, b);
          entry.summary = "hit range point " + std::to_string(b);
          break;
        }
        case TaskKind::MeetContainment: {
          ForceResult r = containment::force_containment(
              out.poset.cond, task.arg, reg, {sc.caps.search_cap, sc.caps.level_cap});
          if (auto* err = std::get_if<std::string>(&r))
            throw ValidationError("meet_containment(k=" + std::to_string(task.arg) +
                                  ") failed: " + *err);
          ForceOk ok = std::get<ForceOk>(std::move(r));
          for (const auto& pr : ok.q.pairs())
            if (!before.has_pair(pr.a, pr.b)) entry.added_pairs.emplace_back(pr.a, pr.b);
          out.poset.cond = std::move(ok.q);
          out.poset.witnessed.push_back(ok.cert.n);
          entry.cert_index = out.poset.certs.size();
          entry.summary = "witnessed level " + std::to_string(ok.cert.n) + ", targets at " +
                          std::to_string(ok.cert.l);
          out.poset.certs.push_back(std::move(ok.cert));
          break;
        }
        case TaskKind::HomeoAdd: {
          size_t a = reg.point_for_level(task.arg);
          if (out.homeo.cond.dom_contains(a)) {
            entry.summary = "already in the domain";
            break;
          }
          out.homeo.cond = homeo::add_point(out.homeo.cond, a, coloring, reg);
          entry.added_pairs.emplace_back(a, out.homeo.cond.f.back().second);
          entry.summary = "mapped level " + std::to_string(task.arg);
          break;
        }
        case TaskKind::HomeoFixBit: {
          FixResult r = homeo::fix_bit_extend(out.homeo.cond, task.arg, reg, sc.caps.search_cap);
          if (auto* err = std::get_if<std::string>(&r))
            throw ValidationError("homeo_fix_bit(k=" + std::to_string(task.arg) +
                                  ") failed: " + *err);
          FixOk ok = std::get<FixOk>(std::move(r));
          out.homeo.cond = std::move(ok.q);
          out.homeo.witnessed.push_back(ok.cert.n);
          entry.cert_index = out.homeo.certs.size();
          entry.summary = "fixed bit " + std::to_string(ok.cert.n);
          out.homeo.certs.push_back(ok.cert);
          break;
        }
      }
    } catch (const ValidationError&) {
      throw;
    } catch (const std::exception& e) {
      throw ValidationError(std::string(task_kind_name(task.kind)) + " failed: " + e.what());
    }

    if (!out.poset.cond.extends(before)) poset_monotone = false;
    if (!homeo::extends(out.homeo.cond, h_before)) homeo_monotone = false;
    out.transcript.push_back(std::move(entry));
  }

  auto add_check = [&](const std::string& name, bool pass, std::string detail = "") {
    out.checks.push_back(CheckItem{name, pass, std::move(detail)});
  };

  const UPSet& x = reg.base();
  if (out.poset.present) {
    bool certs_ok = true;
    std::string why;
    for (const auto& cert : out.poset.certs) {
      auto chk = containment::check_certificate(out.poset.cond, cert, view, x);
      if (!chk.ok) {
        certs_ok = false;
        why = chk.reason;
        break;
      }
    }
    add_check("poset.certificates", certs_ok, why);
    add_check("poset.monotone", poset_monotone);

    bool in_base = std::all_of(out.poset.witnessed.begin(), out.poset.witnessed.end(),
                               [&](uint64_t n) { return x.member(n); });
    add_check("poset.witnessed_in_base", in_base);
    bool floors = std::all_of(out.poset.certs.begin(), out.poset.certs.end(),
                              [](const Certificate& c) { return c.n >= c.k; });
    add_check("poset.witnessed_above_floor", floors);

    bool density = std::all_of(domain_requests.begin(), domain_requests.end(),
                               [&](size_t a) { return out.poset.cond.dom_contains(a); });
    add_check("poset.domain_density", density);

    containment::RegistryCombView comb(reg);
    out.poset.xinf =
        containment::little_xinf(containment::induced_map(out.poset.cond, comb), x,
                                 sc.caps.horizon);
    bool in_xinf = std::all_of(out.poset.witnessed.begin(), out.poset.witnessed.end(),
                               [&](uint64_t n) {
                                 return std::find(out.poset.xinf.begin(), out.poset.xinf.end(),
                                                  n) != out.poset.xinf.end();
                               });
    add_check("poset.witnessed_in_xinf", in_xinf);

    out.poset.invariant =
        containment::little_invariant_check(out.poset.witnessed, out.poset.cond, reg);
    add_check("poset.little_invariant", out.poset.invariant.pass);
  }

  if (out.homeo.present) {
    auto val = homeo::validate(out.homeo.cond, coloring, reg);
    add_check("homeo.valid", val.ok, val.reason);
    add_check("homeo.monotone", homeo_monotone);

    bool certs_ok = true;
    std::string why;
    for (const auto& cert : out.homeo.certs) {
      auto chk = homeo::check_fix_certificate(out.homeo.cond, cert.n);
      if (!chk.ok) {
        certs_ok = false;
        why = chk.reason;
        break;
      }
    }
    add_check("homeo.certificates", certs_ok, why);

    bool in_base = std::all_of(out.homeo.witnessed.begin(), out.homeo.witnessed.end(),
                               [&](uint64_t n) { return x.member(n); });
    add_check("homeo.witnessed_in_base", in_base);

    containment::RegistryCombView comb(reg);
    std::vector<poset::PairEntry> pairs;
    for (const auto& [a, b] : out.homeo.cond.f) pairs.push_back(poset::PairEntry{a, b});
    out.homeo.invariant = containment::little_invariant_check(out.homeo.witnessed, pairs, comb);
    add_check("homeo.little_invariant", out.homeo.invariant.pass);
  }

  out.pass = std::all_of(out.checks.begin(), out.checks.end(),
                         [](const CheckItem& c) { return c.pass; });
  return out;
}

}  // namespace towerkit
