#include "fcg/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "fcg/word.hpp"
#include "json.hpp"

namespace fcg::io {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_error(const std::string& origin, const std::string& msg) {
  throw InputError(origin + ": " + msg);
}

Json parse_json(std::string_view text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema_error(origin, std::string("invalid JSON: ") + e.what());
  }
}

const Json& require(const Json& obj, const char* key, const std::string& origin) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(origin, std::string("missing key \"") + key + "\"");
  return *it;
}

void allow_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& origin) {
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) schema_error(origin, "unknown key \"" + k + "\"");
}

std::vector<long long> int_array(const Json& j, const std::string& what, const std::string& origin) {
  if (!j.is_array()) schema_error(origin, what + " must be an array of integers");
  std::vector<long long> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) schema_error(origin, what + " must be an array of integers");
    out.push_back(x.get<long long>());
  }
  return out;
}

FinitePermDescriptor perm_descriptor(const Json& j, const std::string& origin) {
  FinitePermDescriptor d;
  const Json& deg = require(j, "degree", origin);
  if (!deg.is_number_integer() || deg.get<long long>() < 1) schema_error(origin, "degree must be a positive integer");
  d.degree = deg.get<std::size_t>();
  const Json& gens = require(j, "generators", origin);
  if (!gens.is_object()) schema_error(origin, "generators must be an object of name: images");
  for (const auto& [name, images] : gens.items()) {
    auto imgs = int_array(images, "generator " + name, origin);
    if (imgs.size() != d.degree) schema_error(origin, "generator " + name + " has the wrong degree");
    d.generator_names.push_back(name);
    d.generators.push_back(Perm::from_one_based(imgs));
  }
  return d;
}

Matrix matrix(const Json& j, std::size_t n, const std::string& what, const std::string& origin) {
  if (!j.is_array() || j.size() != n) schema_error(origin, what + " must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = int_array(j[r], what, origin);
    if (row.size() != n) schema_error(origin, what + " has a row of the wrong length");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
  }
  return m;
}

Element element_from(const Group& g, const Json& spec) {
  if (spec.is_string()) return evaluate(g, parse_word(spec.get<std::string>(), generator_table(g)));
  if (spec.is_array()) {
    if (g.backend() != Backend::FinitePermutation)
      throw InputError("image arrays denote permutations; affine elements use {\"t\": .., \"f\": ..}");
    std::vector<long long> imgs;
    for (const auto& x : spec) {
      if (!x.is_number_integer()) throw InputError("permutation images must be integers");
      imgs.push_back(x.get<long long>());
    }
    Perm p = Perm::from_one_based(imgs);
    if (p.degree() != g.degree()) throw InputError("permutation has the wrong degree");
    return Element(std::move(p));
  }
  if (spec.is_object()) {
    if (g.backend() != Backend::Affine) throw InputError("{\"t\", \"f\"} elements need an affine group");
    allow_keys(spec, {"t", "f"}, "element");
    Vector t(g.rank(), 0);
    if (spec.contains("t")) {
      auto v = int_array(spec["t"], "translation", "element");
      if (v.size() != g.rank()) throw InputError("translation has the wrong length");
      t.assign(v.begin(), v.end());
    }
    std::uint32_t f = g.finite_identity();
    if (spec.contains("f")) {
      const Json& fs = spec["f"];
      if (fs.is_string()) {
        Element x = evaluate(g, parse_word(fs.get<std::string>(), generator_table(g)));
        if (!is_zero(x.affine().translation)) throw InputError("\"f\" must be a word in the finite generators");
        f = x.affine().finite;
      } else {
        auto imgs = int_array(fs, "finite part", "element");
        f = g.finite_index(Perm::from_one_based(imgs));
      }
    }
    return g.affine_element(std::move(t), f);
  }
  throw InputError("unrecognized element spec " + spec.dump());
}

Subgroup subgroup_from(const Group& g, const Json& spec) {
  if (spec.is_string() && spec.get<std::string>() == "*") return Subgroup::whole(g);
  if (!spec.is_array()) throw InputError("subgroup spec must be \"*\" or an array of elements");
  std::vector<Element> gens;
  for (const auto& e : spec) gens.push_back(element_from(g, e));
  return Subgroup::generate(g, gens);
}

ChainKind chain_kind(const Json& j, const std::string& origin) {
  if (!j.is_string()) schema_error(origin, "chain kind must be a string");
  const auto s = j.get<std::string>();
  if (s == "nilpotent") return ChainKind::Nilpotent;
  if (s == "solvable") return ChainKind::Solvable;
  schema_error(origin, "chain kind must be \"nilpotent\" or \"solvable\"");
}

NamedChain chain_from(const Group& g, const Json& j, const std::string& origin) {
  if (!j.is_object()) schema_error(origin, "chain must be an object");
  NamedChain c;
  if (j.contains("name")) c.name = j["name"].get<std::string>();
  c.kind = chain_kind(require(j, "kind", origin), origin);
  const Json& levels = require(j, "levels", origin);
  if (!levels.is_array() || levels.empty()) schema_error(origin, "levels must be a nonempty array");
  try {
    for (const auto& l : levels) c.levels.push_back(subgroup_from(g, l));
  } catch (const InputError& e) {
    schema_error(origin, e.what());
  }
  return c;
}

}  // namespace

FCChain NamedChain::to_chain() const {
  if (levels.empty()) throw InputError("empty chain");
  return FCChain::make(levels.front().group(), kind, levels);
}

GroupFile parse_group(std::string_view text, const std::string& origin) {
  const Json j = parse_json(text, origin);
  if (!j.is_object()) schema_error(origin, "top level must be an object");
  const Json& schema = require(j, "schema", origin);
  if (schema != "fc-group/1") schema_error(origin, "unsupported schema " + schema.dump());
  const std::string kind = require(j, "kind", origin).get<std::string>();
  std::string name = j.contains("name") ? j["name"].get<std::string>() : std::string("unnamed");

  std::optional<Group> group;
  try {
    if (kind == "finite-permutation") {
      allow_keys(j, {"schema", "name", "kind", "degree", "generators", "chains", "description"}, origin);
      group = Group::finite(perm_descriptor(j, origin), name);
    } else if (kind == "affine") {
      allow_keys(j, {"schema", "name", "kind", "rank", "translation_names", "finite_part", "action", "chains",
                     "description"},
                 origin);
      AffineDescriptor d;
      const Json& rank = require(j, "rank", origin);
      if (!rank.is_number_integer() || rank.get<long long>() < 0) schema_error(origin, "rank must be a non-negative integer");
      d.rank = rank.get<std::size_t>();
      d.finite_part = perm_descriptor(require(j, "finite_part", origin), origin);
      const Json& action = require(j, "action", origin);
      if (!action.is_object()) schema_error(origin, "action must map finite generator names to matrices");
      for (const auto& gname : d.finite_part.generator_names) {
        if (!action.contains(gname)) schema_error(origin, "no action matrix for generator " + gname);
        d.action.push_back(matrix(action[gname], d.rank, "action of " + gname, origin));
      }
      if (action.size() != d.finite_part.generator_names.size()) schema_error(origin, "action names an unknown generator");
      if (j.contains("translation_names")) {
        for (const auto& t : j["translation_names"]) d.translation_names.push_back(t.get<std::string>());
        if (d.translation_names.size() != d.rank) schema_error(origin, "translation_names has the wrong length");
      }
      group = Group::affine(std::move(d), name);
    } else {
      schema_error(origin, "kind must be \"finite-permutation\" or \"affine\"");
    }
  } catch (const Json::exception& e) {
    schema_error(origin, e.what());
  } catch (const InputError& e) {
    throw InputError(std::string(e.what()).rfind(origin, 0) == 0 ? e.what() : origin + ": " + e.what());
  }

  GroupFile out{name, *group, sha256_hex(text), {}};
  if (j.contains("chains")) {
    if (!j["chains"].is_array()) schema_error(origin, "chains must be an array");
    for (const auto& c : j["chains"]) out.chains.push_back(chain_from(*group, c, origin));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupFile load_group(const std::filesystem::path& path) {
  return parse_group(read_file(path), path.filename().string());
}

NamedChain parse_chain(std::string_view text, const GroupFile& group) {
  const std::string origin = "chain";
  const Json j = parse_json(text, origin);
  if (!j.is_object()) schema_error(origin, "top level must be an object");
  allow_keys(j, {"schema", "group", "name", "kind", "levels"}, origin);
  if (require(j, "schema", origin) != "fc-chain/1") schema_error(origin, "unsupported schema");
  if (j.contains("group") && j["group"].get<std::string>() != group.name)
    schema_error(origin, "chain is for group " + j["group"].get<std::string>() + ", not " + group.name);
  return chain_from(group.group, j, origin);
}

NamedChain load_chain(const std::filesystem::path& path, const GroupFile& group, std::string* digest) {
  const std::string text = read_file(path);
  if (digest) *digest = sha256_hex(text);
  return parse_chain(text, group);
}

Element parse_element(const Group& group, std::string_view json_text) {
  return element_from(group, parse_json(json_text, "element"));
}

Subgroup parse_subgroup(const Group& group, std::string_view json_text) {
  return subgroup_from(group, parse_json(json_text, "subgroup"));
}

std::filesystem::path fixture_directory() {
  if (const char* env = std::getenv("FCG_FIXTURE_DIR"); env && *env) return env;
#ifdef FCG_DEFAULT_FIXTURE_DIR
  return FCG_DEFAULT_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(fixture_directory(), ec))
    if (entry.path().extension() == ".json") out.push_back(entry.path().stem().string());
  if (ec) throw IoError("cannot list fixtures in " + fixture_directory().string());
  std::sort(out.begin(), out.end());
  return out;
}

std::filesystem::path resolve_group(const std::string& name_or_path) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(name_or_path, ec)) return name_or_path;
  auto candidate = fixture_directory() / (name_or_path + ".json");
  if (std::filesystem::is_regular_file(candidate, ec)) return candidate;
  throw IoError("no group file or fixture named " + name_or_path);
}

GroupFile load_fixture(const std::string& name) { return load_group(resolve_group(name)); }

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw ComputationError("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

}  // namespace fcg::io
