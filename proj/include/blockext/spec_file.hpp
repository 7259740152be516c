#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "blockext/block_spec.hpp"

namespace blockext {

/// A block specification as written on disk, plus run options.
///
///   # comment
///   format = 1
///   name = example-a
///   p = 3
///   exponents = 1          # orders p^n_i of the cyclic factors of D
///   phi = 1                # optional
///   order_bound = 512      # optional
///   allow_c2_factors = false
///
///   [generator]            # one section per generator of E
///   perm = 1 2 3 0         # images of the points 0..n-1
///   action = 2             # matrix rows separated by ';'
///
///   [options]
///   precision = 6
///   enum_bound = 1000000
///   size_guard = 250000
struct SpecFile {
  int format = 1;
  std::string name;
  BlockSpec spec;
  std::optional<int> precision;
  std::optional<std::int64_t> enum_bound;
  std::optional<std::int64_t> size_guard;

  friend bool operator==(const SpecFile& a, const SpecFile& b);
};

/// Throws ParseError with "source:line:column: message".
SpecFile parse_spec(std::string_view text, const std::string& source = "<input>");
SpecFile read_spec_file(const std::filesystem::path& path);
std::string serialize_spec(const SpecFile& s);

/// FNV-1a of the serialized spec, as 16 hex digits.
std::string spec_hash(const SpecFile& s);

}  // namespace blockext
