#include "simcache/workload.hpp"

#include <cassert>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>

namespace simcache {

void WorkloadConfig::validate() const {
  if (count < 1) throw ConfigError("count: must be >= 1");
  if (!(mem_fraction >= 0.0 && mem_fraction <= 1.0))
    throw ConfigError("mem_fraction: must be in [0, 1]");
  if (addr_low > addr_high) throw ConfigError("addr_low: must be <= addr_high");
  if (mem_fraction > 0.0 && addr_low < 1)
    throw ConfigError("addr_low: must be >= 1 (block id 0 is reserved)");
}

std::uint32_t sample_address(StreamRng& rng, std::uint32_t low, std::uint32_t high) {
  if (low > high) throw DomainError("sample_address: low > high");
  return rng.triangular_int(low, high);
}

InstructionStream generate_stream(const WorkloadConfig& cfg, std::uint32_t thread,
                                  std::uint64_t seed) {
  cfg.validate();
  StreamRng rng(seed, RngPurpose::workload, thread);
  InstructionStream out;
  out.instructions.reserve(cfg.count);
  std::uint32_t offset = cfg.per_thread_offset * thread;
  for (std::uint64_t i = 0; i < cfg.count; ++i) {
    Instruction ins;
    ins.seq = cfg.seq_base + i;
    ins.thread = thread;
    if (rng.uniform() < cfg.mem_fraction) {
      ins.accesses_memory = true;
      ins.address = sample_address(rng, cfg.addr_low, cfg.addr_high) + offset;
    }
    out.instructions.push_back(ins);
  }
  return out;
}

void write_trace(const InstructionStream& stream, std::ostream& sink) {
  sink << "seq,mem,addr,thread\n";
  for (const auto& ins : stream.instructions) {
    sink << ins.seq << ',' << (ins.accesses_memory ? 1 : 0) << ',' << ins.address
         << ',' << ins.thread << '\n';
  }
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& why) {
  throw ConfigError("trace line " + std::to_string(line_no) + ": " + why);
}

std::uint64_t parse_u64(std::string_view field, std::size_t line_no, const char* name) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || p != field.data() + field.size())
    parse_fail(line_no, std::string("non-integer ") + name + " field '" + std::string(field) + "'");
  return v;
}

}  // namespace

InstructionStream read_trace(std::istream& source) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(source, line)) throw ConfigError("trace line 1: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "seq,mem,addr,thread")
    parse_fail(1, "bad header '" + line + "'");

  InstructionStream out;
  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) parse_fail(line_no, "empty line");

    std::string_view rest = line;
    std::string_view fields[4];
    for (int f = 0; f < 4; ++f) {
      auto comma = rest.find(',');
      if (f < 3) {
        if (comma == std::string_view::npos) parse_fail(line_no, "expected 4 comma-separated fields");
        fields[f] = rest.substr(0, comma);
        rest.remove_prefix(comma + 1);
      } else {
        if (comma != std::string_view::npos) parse_fail(line_no, "expected 4 comma-separated fields");
        fields[f] = rest;
      }
    }

    Instruction ins;
    ins.seq = parse_u64(fields[0], line_no, "seq");
    std::uint64_t mem = parse_u64(fields[1], line_no, "mem");
    if (mem > 1) parse_fail(line_no, "mem field must be 0 or 1");
    ins.accesses_memory = mem == 1;
    ins.address = static_cast<std::uint32_t>(parse_u64(fields[2], line_no, "addr"));
    ins.thread = static_cast<std::uint32_t>(parse_u64(fields[3], line_no, "thread"));
    if (!ins.accesses_memory && ins.address != 0)
      parse_fail(line_no, "non-memory instruction with nonzero address");
    if (ins.accesses_memory && ins.address == 0)
      parse_fail(line_no, "memory instruction with address 0");
    out.instructions.push_back(ins);
  }
  return out;
}

}  // namespace simcache
