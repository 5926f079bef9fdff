#include "gdjcpb/chain.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace gdjcpb {

namespace {

//! Whitespace-splits one line. Tabs and repeated blanks are tolerated.
std::vector<std::string_view> split_fields(std::string_view line) {
   std::vector<std::string_view> fields;
   std::size_t pos = 0;
   while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                   line[pos] == '\r')) {
         ++pos;
      }
      std::size_t start = pos;
      while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' &&
             line[pos] != '\r') {
         ++pos;
      }
      if (pos > start) {
         fields.push_back(line.substr(start, pos - start));
      }
   }
   return fields;
}

std::size_t parse_positive(std::string_view token, std::size_t line,
                           const char* what) {
   unsigned long long value = 0;
   const char* first = token.data();
   const char* last = token.data() + token.size();
   auto [ptr, ec] = std::from_chars(first, last, value);
   if (ec == std::errc::result_out_of_range) {
      throw ParseError(line, std::string(what) + " '" + std::string(token) +
                                 "' is out of range");
   }
   if (ec != std::errc() || ptr != last) {
      throw ParseError(line, std::string("malformed integer '") +
                                 std::string(token) + "' for " + what);
   }
   if (value == 0) {
      throw ParseError(line, std::string(what) + " must be positive");
   }
   return static_cast<std::size_t>(value);
}

}  // namespace

void ChainInstance::validate() const {
   if (factors.empty()) {
      throw std::invalid_argument("chain must contain at least one factor");
   }
   for (std::size_t i = 0; i < factors.size(); ++i) {
      const ElementalSpec& f = factors[i];
      if (f.n == 0 || f.m == 0 || f.edges == 0) {
         throw std::invalid_argument("factor " + std::to_string(i + 1) +
                                     ": dimensions and edge count must be positive");
      }
      if (i + 1 < factors.size() && f.m != factors[i + 1].n) {
         throw std::invalid_argument(
              "factor " + std::to_string(i + 2) + ": input dimension " +
              std::to_string(factors[i + 1].n) +
              " does not match output dimension " + std::to_string(f.m) +
              " of factor " + std::to_string(i + 1));
      }
   }
}

ParseError::ParseError(std::size_t line, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line) + ": " + reason),
      line_(line) {}

ChainInstance parse_instance(std::istream& in) {
   std::string line;
   std::size_t line_no = 0;
   std::size_t q = 0;
   bool have_q = false;

   ChainInstance inst;
   while (std::getline(in, line)) {
      ++line_no;
      auto fields = split_fields(line);
      if (fields.empty()) {
         continue;  // blank lines are tolerated anywhere
      }
      if (!have_q) {
         if (fields.size() != 1) {
            throw ParseError(line_no, "expected a single chain length, got " +
                                          std::to_string(fields.size()) +
                                          " fields");
         }
         q = parse_positive(fields[0], line_no, "chain length");
         have_q = true;
         inst.factors.reserve(q);
         continue;
      }
      if (inst.factors.size() == q) {
         throw ParseError(line_no, "unexpected content after " +
                                       std::to_string(q) + " factor lines");
      }
      if (fields.size() != 3) {
         throw ParseError(line_no, "expected 3 fields (m n edges), got " +
                                       std::to_string(fields.size()));
      }
      ElementalSpec spec;
      spec.m = parse_positive(fields[0], line_no, "output dimension");
      spec.n = parse_positive(fields[1], line_no, "input dimension");
      spec.edges = parse_positive(fields[2], line_no, "edge count");
      if (!inst.factors.empty() && inst.factors.back().m != spec.n) {
         throw ParseError(line_no,
                          "input dimension " + std::to_string(spec.n) +
                              " does not match output dimension " +
                              std::to_string(inst.factors.back().m) +
                              " of the previous factor");
      }
      inst.factors.push_back(spec);
   }
   if (!have_q) {
      throw ParseError(line_no + 1, "empty instance; expected a chain length");
   }
   if (inst.factors.size() != q) {
      throw ParseError(line_no + 1,
                       "expected " + std::to_string(q) + " factor lines, got " +
                           std::to_string(inst.factors.size()));
   }
   inst.validate();
   return inst;
}

ChainInstance parse_instance(const std::string& text) {
   std::istringstream in(text);
   return parse_instance(in);
}

std::string serialize_instance(const ChainInstance& inst) {
   inst.validate();
   std::string out = std::to_string(inst.factors.size());
   out.push_back('\n');
   for (const ElementalSpec& f : inst.factors) {
      out += std::to_string(f.m);
      out.push_back(' ');
      out += std::to_string(f.n);
      out.push_back(' ');
      out += std::to_string(f.edges);
      out.push_back('\n');
   }
   return out;
}

}  // namespace gdjcpb
