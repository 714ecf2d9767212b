#include "knotcomm/catalog.hpp"

#include <json.hpp>

#include <cctype>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "knotcomm/errors.hpp"

namespace knotcomm {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& origin, const std::string& msg) {
  throw CatalogError("catalog " + origin + ": " + msg);
}

[[noreturn]] void fail_knot(const std::string& origin, std::size_t index,
                            const std::string& name, const std::string& msg) {
  std::ostringstream os;
  os << "knot " << index;
  if (!name.empty()) os << " (\"" << name << "\")";
  os << ": " << msg;
  fail(origin, os.str());
}

long long get_int(const Json& j, const std::string& origin, std::size_t index,
                  const std::string& name, const std::string& field) {
  if (!j.is_number_integer()) {
    fail_knot(origin, index, name, field + " must be an integer");
  }
  if (j.is_number_unsigned() &&
      j.get<unsigned long long>() > static_cast<unsigned long long>(LLONG_MAX)) {
    fail_knot(origin, index, name, field + " is out of range");
  }
  return j.get<long long>();
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

/* Boxed here so that both load and save agree on what a catalog may hold. */
const std::set<std::string>& knot_keys() {
  static const std::set<std::string> keys = {
      "name",   "seifert", "alexander", "signature", "signature_jumps",
      "mirror", "genus",   "fibered",   "comment"};
  return keys;
}

long long coeff_out(const Int& v) {
  if (!v.fits_slong_p()) {
    throw CatalogError("catalog export: coefficient " + v.get_str() +
                       " does not fit in a catalog integer");
  }
  return v.get_si();
}

KnotData parse_knot(const Json& j, const std::string& origin, std::size_t index) {
  if (!j.is_object()) fail_knot(origin, index, "", "entry must be an object");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail_knot(origin, index, "", "name must be a string");
    name = j["name"].get<std::string>();
  }
  if (name.empty()) fail_knot(origin, index, "", "missing or empty name");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (knot_keys().count(it.key()) == 0) {
      fail_knot(origin, index, name, "unknown field \"" + it.key() + "\"");
    }
  }

  KnotData d;
  d.name = name;

  if (j.contains("seifert")) {
    const Json& s = j["seifert"];
    if (!s.is_array()) fail_knot(origin, index, name, "seifert must be an array of rows");
    IntMatrix m;
    for (const Json& row : s) {
      if (!row.is_array() || row.size() != s.size()) {
        fail_knot(origin, index, name, "seifert matrix must be square");
      }
      std::vector<Int> r;
      for (const Json& x : row) {
        r.push_back(Int(static_cast<long>(get_int(x, origin, index, name, "seifert entry"))));
      }
      m.push_back(std::move(r));
    }
    d.seifert = std::move(m);
  }

  if (j.contains("alexander")) {
    const Json& a = j["alexander"];
    if (!a.is_array() || a.empty()) {
      fail_knot(origin, index, name, "alexander must be a nonempty coefficient array");
    }
    std::vector<Int> c;
    for (const Json& x : a) {
      c.push_back(Int(static_cast<long>(get_int(x, origin, index, name, "alexander coefficient"))));
    }
    d.alexander = IntPoly(std::move(c));
  }

  if (j.contains("signature")) {
    long long s = get_int(j["signature"], origin, index, name, "signature");
    if (s < INT_MIN || s > INT_MAX) fail_knot(origin, index, name, "signature is out of range");
    d.signature = static_cast<int>(s);
  }

  if (j.contains("signature_jumps")) {
    const Json& js = j["signature_jumps"];
    if (!js.is_array()) fail_knot(origin, index, name, "signature_jumps must be an array");
    std::vector<DeclaredJump> jumps;
    for (const Json& e : js) {
      if (!e.is_object() || !e.contains("turn") || !e.contains("value") || e.size() != 2) {
        fail_knot(origin, index, name,
                  "each signature jump must be an object with turn and value");
      }
      if (!e["turn"].is_string()) fail_knot(origin, index, name, "jump turn must be a string");
      long long v = get_int(e["value"], origin, index, name, "jump value");
      if (v < INT_MIN || v > INT_MAX) fail_knot(origin, index, name, "jump value is out of range");
      try {
        jumps.push_back(parse_jump(e["turn"].get<std::string>(), static_cast<int>(v)));
      } catch (const CatalogError& err) {
        fail_knot(origin, index, name, err.what());
      }
    }
    d.jumps = std::move(jumps);
  }

  if (j.contains("mirror")) {
    if (!j["mirror"].is_boolean()) fail_knot(origin, index, name, "mirror must be a boolean");
    d.mirror = j["mirror"].get<bool>();
  }

  if (j.contains("genus")) {
    long long g = get_int(j["genus"], origin, index, name, "genus");
    if (g < 0 || g > INT_MAX) fail_knot(origin, index, name, "genus must be nonnegative");
    d.genus = static_cast<int>(g);
  }

  if (j.contains("fibered")) {
    if (!j["fibered"].is_boolean()) fail_knot(origin, index, name, "fibered must be a boolean");
    d.fibered = j["fibered"].get<bool>();
  }

  if (j.contains("comment")) {
    if (!j["comment"].is_string()) fail_knot(origin, index, name, "comment must be a string");
    d.comment = j["comment"].get<std::string>();
  }

  return d;
}

}  // namespace

DeclaredJump parse_jump(const std::string& turn, int value) {
  DeclaredJump d;
  d.text = turn;
  d.value = value;

  std::size_t slash = turn.find('/');
  std::size_t dot = turn.find('.');
  if (slash != std::string::npos) {
    std::string num = turn.substr(0, slash);
    std::string den = turn.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw CatalogError("jump turn \"" + turn + "\" is not a fraction of integers");
    }
    Int d_int(den, 10);
    if (d_int == 0) {
      throw CatalogError("jump turn \"" + turn + "\" has a zero denominator");
    }
    Rat q(Int(num, 10), d_int);
    q.canonicalize();
    d.turn = q;
    d.digits = 0;
    return d;
  }
  if (dot != std::string::npos) {
    std::string whole = turn.substr(0, dot);
    std::string frac = turn.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) {
      throw CatalogError("jump turn \"" + turn + "\" is not a decimal number");
    }
    Int num(whole + frac, 10);
    Int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rat q(num, den);
    q.canonicalize();
    d.turn = q;
    d.digits = static_cast<int>(frac.size());
    return d;
  }
  throw CatalogError("jump turn \"" + turn +
                     "\" must be a fraction \"p/q\" or a decimal");
}

Catalog Catalog::parse(const std::string& text, const std::string& origin) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    /* The library message already carries the line and column. */
    fail(origin, e.what());
  }
  if (!doc.is_object()) fail(origin, "top level must be an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "version" && it.key() != "knots") {
      fail(origin, "unknown top level field \"" + it.key() + "\"");
    }
  }
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<long long>() != 1) {
    fail(origin, "missing or unsupported version (expected 1)");
  }
  if (!doc.contains("knots") || !doc["knots"].is_array()) {
    fail(origin, "missing knots array");
  }

  Catalog cat;
  std::set<std::string> seen;
  std::size_t index = 0;
  for (const Json& j : doc["knots"]) {
    KnotData d = parse_knot(j, origin, index);
    if (!seen.insert(d.name).second) {
      fail_knot(origin, index, d.name, "duplicate name");
    }
    cat.knots_.push_back(std::move(d));
    ++index;
  }
  return cat;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("catalog " + path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

Catalog Catalog::resolve(const std::optional<std::string>& path) {
  if (path) return load(*path);
  const char* env = std::getenv("KNOTCOMM_CATALOG");
  if (env && *env) return load(env);
  return builtin();
}

Catalog Catalog::builtin() {
  Catalog cat;

  {
    KnotData d;
    d.name = "unknot";
    d.alexander = IntPoly{1};
    d.genus = 0;
    d.fibered = true;
    d.comment = "trivial knot";
    cat.add(std::move(d));
  }
  {
    KnotData d;
    d.name = "trefoil";
    d.seifert = IntMatrix{{-1, 1}, {0, -1}};
    d.genus = 1;
    d.fibered = true;
    d.comment = "left handed trefoil from its genus one Seifert surface";
    cat.add(std::move(d));
  }
  {
    KnotData d;
    d.name = "figure8";
    d.seifert = IntMatrix{{1, 1}, {0, -1}};
    d.genus = 1;
    d.fibered = true;
    d.comment = "figure eight knot, amphichiral";
    cat.add(std::move(d));
  }
  {
    KnotData d;
    d.name = "9_48";
    d.alexander = IntPoly{1, -7, 11, -7, 1};
    d.signature = 2;
    d.genus = 2;
    d.fibered = true;
    d.comment = "nine crossing knot with one signature jump pair";
    cat.add(std::move(d));
  }
  {
    KnotData d;
    d.name = "12n_642";
    d.alexander = IntPoly{1, 7, -15, 7, 1};
    d.signature = 2;
    d.genus = 2;
    d.fibered = true;
    d.comment = "twelve crossing knot commensurable with 9_48 up to orientation";
    cat.add(std::move(d));
  }
  {
    KnotData d;
    d.name = "D_s";
    d.alexander = IntPoly{25, -250, 1035, -2300, 2981, -2300, 1035, -250, 25};
    d.genus = 4;
    d.fibered = false;
    d.comment =
        "degree eight template polynomial, not monic, no circle zeros; some "
        "sources misprint the center coefficient 2981 as a trailing term, it "
        "belongs at t^4";
    cat.add(std::move(d));
  }
  {
    KnotData d;
    d.name = "D_f";
    d.alexander = IntPoly{-1, 29, -254, 1035, -2304, 2991, -2304, 1035, -254, 29, -1};
    d.genus = 5;
    d.fibered = true;
    d.comment = "degree ten fibered template polynomial, no circle zeros";
    cat.add(std::move(d));
  }

  return cat;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  out.reserve(knots_.size());
  for (const auto& k : knots_) out.push_back(k.name);
  return out;
}

const KnotData* Catalog::find(const std::string& name) const {
  for (const auto& k : knots_) {
    if (k.name == name) return &k;
  }
  return nullptr;
}

KnotRecord Catalog::record(const std::string& name, const CertifyOptions& opts) const {
  const KnotData* d = find(name);
  if (!d) throw UnknownKnot("no knot named \"" + name + "\" in the catalog");
  return KnotRecord(*d, opts);
}

void Catalog::add(KnotData k) {
  if (k.name.empty()) throw CatalogError("catalog entries need a nonempty name");
  if (find(k.name)) throw CatalogError("duplicate catalog name \"" + k.name + "\"");
  knots_.push_back(std::move(k));
}

std::string Catalog::to_json() const {
  Json doc;
  doc["version"] = 1;
  doc["knots"] = Json::array();
  for (const auto& k : knots_) {
    Json j;
    j["name"] = k.name;
    if (k.seifert) {
      Json rows = Json::array();
      for (const auto& row : *k.seifert) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(coeff_out(x));
        rows.push_back(std::move(r));
      }
      j["seifert"] = std::move(rows);
    }
    if (k.alexander) {
      Json c = Json::array();
      for (const auto& x : k.alexander->coeffs()) c.push_back(coeff_out(x));
      j["alexander"] = std::move(c);
    }
    if (k.signature) j["signature"] = *k.signature;
    if (k.jumps) {
      Json js = Json::array();
      for (const auto& jump : *k.jumps) {
        Json e;
        e["turn"] = jump.text;
        e["value"] = jump.value;
        js.push_back(std::move(e));
      }
      j["signature_jumps"] = std::move(js);
    }
    if (k.mirror) j["mirror"] = true;
    if (k.genus) j["genus"] = *k.genus;
    if (k.fibered) j["fibered"] = *k.fibered;
    if (!k.comment.empty()) j["comment"] = k.comment;
    doc["knots"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

void Catalog::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw CatalogError("catalog " + path + ": cannot open file for writing");
  out << to_json();
  if (!out) throw CatalogError("catalog " + path + ": write failed");
}

}  // namespace knotcomm
