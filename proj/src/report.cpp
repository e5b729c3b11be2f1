#include "report.hpp"

#include "cantor.hpp"

#include <json.hpp>

#include <algorithm>

namespace towerkit {

using nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "towerkit.report/1";

ordered_json invariant_json(const containment::InvariantReport& rep) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : rep.rows)
    rows.push_back({r.n, r.a_id, r.level, r.in_level ? 1 : 0, r.k_bound, r.ok ? 1 : 0});
  return ordered_json{{"pass", rep.pass}, {"rows", rows}};
}

std::string pi_row(uint32_t image, uint64_t level) {
  std::string s(level, '0');
  for (uint64_t i = 0; i < level; ++i)
    if ((image >> (level - 1 - i)) & 1) s[i] = '1';
  return s;
}

}  // namespace

std::string build_report(const RunOutcome& out, uint64_t timing_ms) {
  const poset::Registry& reg = *out.registry;
  ordered_json j;
  j["schema"] = kSchema;
  j["scenario"] = ordered_json::parse(out.scenario.to_json_text());
  j["x"] = reg.base().str();

  ordered_json tower = ordered_json::array();
  for (size_t i = 0; i < reg.tower().size(); ++i) tower.push_back(reg.tower().level(i).str());
  j["tower"] = tower;

  ordered_json a_points = ordered_json::array();
  for (size_t id = 0; id < reg.a_count(); ++id)
    a_points.push_back(
        {{"id", id}, {"level", reg.a(id).level}, {"value", reg.a(id).value.str()}});
  j["a_points"] = a_points;

  ordered_json b_points = ordered_json::array();
  for (size_t id = 0; id < reg.b_count(); ++id)
    b_points.push_back({{"id", id},
                        {"set", reg.b(id).set.str()},
                        {"value", reg.b(id).value.str()},
                        {"color", reg.b(id).color}});
  j["b_points"] = b_points;

  if (out.poset.present) {
    ordered_json sec;
    // ordered pair list carrying the exact values inline, ids beside them
    ordered_json cond = ordered_json::array();
    for (const auto& pr : out.poset.cond.pairs())
      cond.push_back({{"a", pr.a},
                      {"b", pr.b},
                      {"av", reg.a(pr.a).value.str()},
                      {"bv", reg.b(pr.b).value.str()}});
    sec["condition"] = cond;

    ordered_json certs = ordered_json::array();
    for (const auto& cert : out.poset.certs) {
      ordered_json entries = ordered_json::array();
      for (const auto& e : cert.entries) {
        ordered_json entry;
        entry["t"] = e.t_index;
        entry["a0"] = e.a0;
        entry["a0v"] = reg.a(e.a0).value.str();
        entry["a1"] = e.a1 ? ordered_json(*e.a1) : ordered_json(nullptr);
        entry["a1v"] = e.a1 ? ordered_json(reg.a(*e.a1).value.str()) : ordered_json(nullptr);
        entry["s"] = e.s_index.str();  // exceeds JSON number range at deep levels
        entry["b0"] = e.b0;
        entry["b0v"] = reg.b(e.b0).value.str();
        entry["b1"] = e.b1 ? ordered_json(*e.b1) : ordered_json(nullptr);
        entry["b1v"] = e.b1 ? ordered_json(reg.b(*e.b1).value.str()) : ordered_json(nullptr);
        entries.push_back(std::move(entry));
      }
      certs.push_back(
          {{"k", cert.k}, {"n", cert.n}, {"l", cert.l}, {"entries", std::move(entries)}});
    }
    sec["certificates"] = certs;
    sec["witnessed"] = out.poset.witnessed;
    sec["xinf_horizon"] = out.scenario.caps.horizon;
    sec["little_xinf"] = out.poset.xinf;
    sec["little_invariant"] = invariant_json(out.poset.invariant);
    j["poset"] = sec;
  }

  if (out.homeo.present) {
    ordered_json sec;
    ordered_json f = ordered_json::array();
    for (const auto& [a, b] : out.homeo.cond.f) f.push_back({a, b});
    ordered_json pi = ordered_json::array();
    for (uint32_t img : out.homeo.cond.pi) pi.push_back(pi_row(img, out.homeo.cond.level));
    sec["condition"] = {{"f", f}, {"pi", pi}, {"level", out.homeo.cond.level}};
    sec["colors"] = out.scenario.colors;
    ordered_json certs = ordered_json::array();
    for (const auto& c : out.homeo.certs) certs.push_back({{"n", c.n}, {"n_q", c.level}});
    sec["certificates"] = certs;
    sec["witnessed"] = out.homeo.witnessed;
    sec["little_invariant"] = invariant_json(out.homeo.invariant);
    j["homeo"] = sec;
  }

  ordered_json transcript = ordered_json::array();
  for (const auto& t : out.transcript) {
    ordered_json e;
    e["op"] = task_kind_name(t.task.kind);
    e["arg"] = t.task.arg;
    e["summary"] = t.summary;
    ordered_json pairs = ordered_json::array();
    for (const auto& [a, b] : t.added_pairs) pairs.push_back({a, b});
    e["added_pairs"] = pairs;
    if (t.cert_index) e["certificate"] = *t.cert_index;
    transcript.push_back(std::move(e));
  }
  j["transcript"] = transcript;

  ordered_json checks = ordered_json::array();
  for (const auto& c : out.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = checks;
  j["pass"] = out.pass;
  j["timing_ms"] = timing_ms;
  return j.dump();
}

namespace {

// Point tables loaded back from a report; serves the same view interfaces
// the live registry does, so the checkers replay unchanged.
class ReportData final : public poset::PointView, public containment::CombinatorialView {
 public:
  UPSet x;
  std::vector<UPSet> tower;
  struct APt {
    size_t level;
    Rational value;
  };
  struct BPt {
    UPSet set;
    Rational value;
    int color;
  };
  std::vector<APt> a_points;
  std::vector<BPt> b_points;

  Rational a_value(size_t id) const override { return a_points.at(id).value; }
  Rational b_value(size_t id) const override { return b_points.at(id).value; }
  UPSet a_level_set(size_t id) const override { return tower.at(a_points.at(id).level); }
  size_t a_level_index(size_t id) const override { return a_points.at(id).level; }
  UPSet b_set(size_t id) const override { return b_points.at(id).set; }
  const UPSet& base() const override { return x; }
};

struct CheckFail {
  std::string reason;
};

[[noreturn]] void fail(const std::string& reason) {
  throw CheckFail{reason};
}

const ordered_json& field(const ordered_json& j, const char* key) {
  if (!j.contains(key)) fail(std::string("report: missing field '") + key + "'");
  return j[key];
}

containment::InvariantReport parse_invariant(const ordered_json& j) {
  containment::InvariantReport rep;
  rep.pass = field(j, "pass").get<bool>();
  for (const auto& row : field(j, "rows")) {
    if (!row.is_array() || row.size() != 6) fail("report: malformed invariant row");
    containment::InvariantRow r;
    r.n = row[0].get<uint64_t>();
    r.a_id = row[1].get<size_t>();
    r.level = row[2].get<size_t>();
    r.in_level = row[3].get<int>() != 0;
    r.k_bound = row[4].get<uint64_t>();
    r.ok = row[5].get<int>() != 0;
    rep.rows.push_back(r);
  }
  return rep;
}

bool same_invariant(const containment::InvariantReport& a,
                    const containment::InvariantReport& b) {
  if (a.pass != b.pass || a.rows.size() != b.rows.size()) return false;
  for (size_t i = 0; i < a.rows.size(); ++i) {
    const auto &x = a.rows[i], &y = b.rows[i];
    if (x.n != y.n || x.a_id != y.a_id || x.level != y.level || x.in_level != y.in_level ||
        x.k_bound != y.k_bound || x.ok != y.ok)
      return false;
  }
  return true;
}

void check_poset_section(const ordered_json& sec, const ReportData& data) {
  poset::Condition cond;
  for (const auto& pr : field(sec, "condition")) {
    size_t a = field(pr, "a").get<size_t>();
    size_t b = field(pr, "b").get<size_t>();
    if (field(pr, "av").get<std::string>() != data.a_value(a).str() ||
        field(pr, "bv").get<std::string>() != data.b_value(b).str())
      fail("report: condition pair values disagree with the point tables");
    cond.insert_pair(data, a, b);
  }
  if (!cond.is_partial_iso(data)) fail("report: serialized condition is not an isomorphism");

  std::vector<uint64_t> cert_levels;
  for (const auto& cj : field(sec, "certificates")) {
    containment::Certificate cert;
    cert.k = field(cj, "k").get<uint64_t>();
    cert.n = field(cj, "n").get<uint64_t>();
    cert.l = field(cj, "l").get<uint64_t>();
    for (const auto& ej : field(cj, "entries")) {
      containment::CertEntry e;
      e.t_index = field(ej, "t").get<uint64_t>();
      e.a0 = field(ej, "a0").get<size_t>();
      if (!field(ej, "a1").is_null()) e.a1 = ej["a1"].get<size_t>();
      e.s_index = BigInt(field(ej, "s").get<std::string>());
      e.b0 = field(ej, "b0").get<size_t>();
      if (!field(ej, "b1").is_null()) e.b1 = ej["b1"].get<size_t>();
      if (field(ej, "a0v").get<std::string>() != data.a_value(e.a0).str() ||
          field(ej, "b0v").get<std::string>() != data.b_value(e.b0).str())
        fail("report: certificate entry values disagree with the point tables");
      if (e.a1 && field(ej, "a1v").get<std::string>() != data.a_value(*e.a1).str())
        fail("report: certificate entry values disagree with the point tables");
      if (e.b1 && field(ej, "b1v").get<std::string>() != data.b_value(*e.b1).str())
        fail("report: certificate entry values disagree with the point tables");
      cert.entries.push_back(e);
    }
    auto chk = containment::check_certificate(cond, cert, data, data.x);
    if (!chk.ok) fail("report: certificate n=" + std::to_string(cert.n) + ": " + chk.reason);
    cert_levels.push_back(cert.n);
  }

  std::vector<uint64_t> witnessed = field(sec, "witnessed").get<std::vector<uint64_t>>();
  if (witnessed != cert_levels) fail("report: witnessed levels disagree with the certificates");

  std::vector<uint64_t> claimed_xinf = field(sec, "little_xinf").get<std::vector<uint64_t>>();
  uint64_t horizon = field(sec, "xinf_horizon").get<uint64_t>();
  auto recomputed =
      containment::little_xinf(containment::induced_map(cond, data), data.x, horizon);
  if (recomputed != claimed_xinf) fail("report: little_xinf does not replay");
  for (uint64_t n : witnessed)
    if (std::find(claimed_xinf.begin(), claimed_xinf.end(), n) == claimed_xinf.end())
      fail("report: witnessed level " + std::to_string(n) + " outside little_xinf");

  auto claimed_inv = parse_invariant(field(sec, "little_invariant"));
  auto recomputed_inv = containment::little_invariant_check(witnessed, cond.pairs(), data);
  if (!same_invariant(claimed_inv, recomputed_inv))
    fail("report: little_invariant table does not replay");
  if (!recomputed_inv.pass) fail("report: little_invariant violated");
}

void check_homeo_section(const ordered_json& sec, const ReportData& data) {
  const auto& cj = field(sec, "condition");
  homeo::HomeoCondition cond;
  cond.level = field(cj, "level").get<uint64_t>();
  if (cond.level > 20) fail("report: permutation level exceeds the cap");
  for (const auto& pr : field(cj, "f")) {
    if (!pr.is_array() || pr.size() != 2) fail("report: malformed homeo pair");
    cond.f.emplace_back(pr[0].get<size_t>(), pr[1].get<size_t>());
  }
  const auto& pi = field(cj, "pi");
  if (pi.size() != (1ull << cond.level)) fail("report: pi table size mismatch");
  for (const auto& row : pi) {
    std::string s = row.get<std::string>();
    if (s.size() != cond.level) fail("report: pi row width mismatch");
    uint32_t img = 0;
    for (char c : s) {
      if (c != '0' && c != '1') fail("report: pi row not binary");
      img = (img << 1) | (c == '1' ? 1u : 0u);
    }
    cond.pi.push_back(img);
  }

  // structural clauses that don't need the colouring classes
  std::vector<bool> seen(cond.pi.size(), false);
  for (uint32_t img : cond.pi) {
    if (img >= cond.pi.size() || seen[img]) fail("report: pi is not a permutation");
    seen[img] = true;
  }
  for (const auto& [a, b] : cond.f) {
    uint32_t ua = homeo::prefix_index(data.a_level_set(a).complement(), cond.level);
    uint32_t ub = homeo::prefix_index(data.b_set(b), cond.level);
    if (cond.pi[ua] != ub) fail("report: homeo condition does not respect pi");
  }
  int colors = field(sec, "colors").get<int>();
  for (const auto& [a, b] : cond.f) {
    if (static_cast<int>(data.a_level_index(a) % static_cast<size_t>(colors)) !=
        data.b_points.at(b).color)
      fail("report: homeo condition does not preserve the colouring");
  }

  std::vector<uint64_t> witnessed = field(sec, "witnessed").get<std::vector<uint64_t>>();
  std::vector<uint64_t> cert_levels;
  for (const auto& cert : field(sec, "certificates")) {
    uint64_t n = field(cert, "n").get<uint64_t>();
    auto chk = homeo::check_fix_certificate(cond, n);
    if (!chk.ok) fail("report: fix certificate n=" + std::to_string(n) + ": " + chk.reason);
    cert_levels.push_back(n);
  }
  if (witnessed != cert_levels) fail("report: homeo witnessed levels disagree");

  std::vector<poset::PairEntry> pairs;
  for (const auto& [a, b] : cond.f) pairs.push_back(poset::PairEntry{a, b});
  auto claimed_inv = parse_invariant(field(sec, "little_invariant"));
  auto recomputed = containment::little_invariant_check(witnessed, pairs, data);
  if (!same_invariant(claimed_inv, recomputed))
    fail("report: homeo little_invariant does not replay");
  if (!recomputed.pass) fail("report: homeo little_invariant violated");
}

}  // namespace

ReportVerdict check_report(const std::string& report_text) {
  try {
    ordered_json j;
    try {
      j = ordered_json::parse(report_text);
    } catch (const std::exception& e) {
      return {false, std::string("report: not valid JSON: ") + e.what()};
    }
    if (!j.is_object() || !j.contains("schema") || j["schema"] != kSchema)
      fail(std::string("report: expected schema '") + kSchema + "'");

    ReportData data;
    data.x = UPSet::parse(field(j, "x").get<std::string>());
    for (const auto& lvl : field(j, "tower"))
      data.tower.push_back(UPSet::parse(lvl.get<std::string>()));
    if (data.tower.empty() || data.tower.front() != data.x)
      fail("report: tower must start at the base set");

    for (const auto& ap : field(j, "a_points")) {
      size_t id = field(ap, "id").get<size_t>();
      if (id != data.a_points.size()) fail("report: a-point ids out of order");
      size_t level = field(ap, "level").get<size_t>();
      if (level >= data.tower.size()) fail("report: a-point level out of range");
      Rational v = Rational::parse(field(ap, "value").get<std::string>());
      if (cantor::lambda_value(data.tower[level].complement()) != v)
        fail("report: a-point " + std::to_string(id) + " value does not match its level");
      data.a_points.push_back({level, std::move(v)});
    }
    for (const auto& bp : field(j, "b_points")) {
      size_t id = field(bp, "id").get<size_t>();
      if (id != data.b_points.size()) fail("report: b-point ids out of order");
      UPSet set = UPSet::parse(field(bp, "set").get<std::string>());
      Rational v = Rational::parse(field(bp, "value").get<std::string>());
      if (cantor::lambda_value(set) != v)
        fail("report: b-point " + std::to_string(id) + " value does not match its set");
      data.b_points.push_back({std::move(set), std::move(v), field(bp, "color").get<int>()});
    }

    if (j.contains("poset")) check_poset_section(j["poset"], data);
    if (j.contains("homeo")) check_homeo_section(j["homeo"], data);

    bool all_checks = true;
    for (const auto& c : field(j, "checks")) {
      if (!field(c, "pass").get<bool>()) all_checks = false;
    }
    if (field(j, "pass").get<bool>() != all_checks)
      fail("report: overall verdict disagrees with the check list");

    return {true, ""};
  } catch (const CheckFail& f) {
    return {false, f.reason};
  } catch (const std::exception& e) {
    return {false, std::string("report: ") + e.what()};
  }
}

}  // namespace towerkit
