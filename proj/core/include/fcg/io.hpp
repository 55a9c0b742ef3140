#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fcg/fc_analysis.hpp"

// Group and chain files. Group files use schema "fc-group/1", chain files
// "fc-chain/1"; permutations are 1-based image arrays, matrices row-major.
//
// Element specs: a word over the generator names ("t*r", "[a,b]", "a^2"),
// a 1-based image array (finite groups), or {"t": [..], "f": word|images}
// (affine groups). Subgroup specs: "*" for the whole group or an array of
// element specs.
namespace fcg::io {

struct NamedChain {
  std::string name;
  ChainKind kind = ChainKind::Nilpotent;
  std::vector<Subgroup> levels;

  FCChain to_chain() const;
};

struct GroupFile {
  std::string name;
  Group group;
  std::string digest;  // SHA-256 of the file contents
  std::vector<NamedChain> chains;
};

/// Throws InputError on schema violations and failed validation.
GroupFile parse_group(std::string_view text, const std::string& origin = "<memory>");
/// Throws IoError if the file cannot be read.
GroupFile load_group(const std::filesystem::path& path);

NamedChain parse_chain(std::string_view text, const GroupFile& group);
NamedChain load_chain(const std::filesystem::path& path, const GroupFile& group, std::string* digest = nullptr);

/// Element or subgroup from the JSON text of a spec.
Element parse_element(const Group& group, std::string_view json_text);
Subgroup parse_subgroup(const Group& group, std::string_view json_text);

/// $FCG_FIXTURE_DIR, else the directory configured at build time.
std::filesystem::path fixture_directory();
std::vector<std::string> fixture_names();
/// An existing file path, or the name of a fixture.
std::filesystem::path resolve_group(const std::string& name_or_path);
GroupFile load_fixture(const std::string& name);

std::string read_file(const std::filesystem::path& path);
std::string sha256_hex(std::string_view data);

}  // namespace fcg::io
