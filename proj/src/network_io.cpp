#include "oblivnet/network_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace oblivnet {

ParseError::ParseError(std::size_t line, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line) + ": " + reason),
      line_(line),
      reason_(reason) {}

std::string serialize(const Network& net, std::string_view comment) {
  std::string out;
  out.reserve(16 + net.size() * 12);
  std::size_t pos = 0;
  while (pos < comment.size()) {
    std::size_t end = comment.find('\n', pos);
    if (end == std::string_view::npos) end = comment.size();
    out += "# ";
    out += comment.substr(pos, end - pos);
    out += '\n';
    pos = end + 1;
  }
  out += "width ";
  out += std::to_string(net.width());
  out += '\n';
  for (const Gate& g : net.gates()) {
    out += gate_letter(g.kind);
    out += ' ';
    out += std::to_string(g.lo);
    out += ' ';
    out += std::to_string(g.hi);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::optional<std::uint64_t> parse_index(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Network parse(std::string_view text) {
  std::optional<Network> net;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (line.find('\r') != std::string_view::npos)
      throw ParseError(line_no, "carriage return found; expected LF line endings");
    if (line.empty() || line.front() == '#') continue;

    const auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (!net) {
      if (fields.size() != 2 || fields[0] != "width")
        throw ParseError(line_no, "expected 'width <n>' header");
      const auto w = parse_index(fields[1]);
      if (!w || *w == 0 || *w > UINT32_MAX)
        throw ParseError(line_no, "invalid width '" + std::string(fields[1]) + "'");
      net.emplace(static_cast<std::size_t>(*w));
      continue;
    }

    if (fields.size() != 3 || fields[0].size() != 1)
      throw ParseError(line_no, "expected '<c|r|x> <i> <j>'");
    GateKind kind;
    switch (fields[0][0]) {
      case 'c':
        kind = GateKind::forward;
        break;
      case 'r':
        kind = GateKind::reverse;
        break;
      case 'x':
        kind = GateKind::swap;
        break;
      default:
        throw ParseError(line_no, "unknown gate kind '" + std::string(fields[0]) + "'");
    }
    const auto lo = parse_index(fields[1]);
    const auto hi = parse_index(fields[2]);
    if (!lo || !hi) throw ParseError(line_no, "gate indices must be non-negative integers");
    if (*lo >= *hi) throw ParseError(line_no, "gate requires i < j");
    if (*hi >= net->width())
      throw ParseError(line_no, "index " + std::to_string(*hi) + " out of range for width " +
                                    std::to_string(net->width()));
    net->add({kind, static_cast<Wire>(*lo), static_cast<Wire>(*hi)});
  }
  if (!net) throw ParseError(line_no, "missing 'width <n>' header");
  return std::move(*net);
}

Network read_network(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_network(const std::filesystem::path& path, const Network& net,
                   std::string_view comment) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize(net, comment);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace oblivnet
