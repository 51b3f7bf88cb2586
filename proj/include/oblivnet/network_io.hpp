#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "oblivnet/network.hpp"

namespace oblivnet {

// Text format, one record per LF-terminated line:
//
//   # optional comment lines
//   width <n>
//   c <i> <j>     forward comparator (min to i)
//   r <i> <j>     reverse comparator (max to i)
//   x <i> <j>     swap
//
// Indices are 0-based decimal with i < j.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason);
  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

/// `comment` lines, if any, are emitted first, each prefixed with "# ".
std::string serialize(const Network& net, std::string_view comment = {});
Network parse(std::string_view text);

Network read_network(const std::filesystem::path& path);
void write_network(const std::filesystem::path& path, const Network& net,
                   std::string_view comment = {});

}  // namespace oblivnet
