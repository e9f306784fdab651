#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "slpz/canonical.hpp"
#include "slpz/container.hpp"
#include "slpz/encoded_dictionary.hpp"
#include "slpz/errors.hpp"
#include "slpz/monotone.hpp"
#include "slpz/repair.hpp"

namespace slpz::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// SLPZ_LOG: 0 silent, 1 summaries (default), 2 adds timings.
int log_level() {
  const char* v = std::getenv("SLPZ_LOG");
  if (!v || !*v) return 1;
  return std::atoi(v);
}

std::string read_all(const std::string& path, std::istream& std_in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std_in.rdbuf();
    if (std_in.bad()) throw IoError("cannot read standard input");
    return std::move(ss).str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  std::string data((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  if (f.bad()) throw IoError("cannot read " + path);
  return data;
}

void write_all(const std::string& path, std::ostream& std_out, const char* data, std::size_t size) {
  if (path == "-") {
    std_out.write(data, static_cast<std::streamsize>(size));
    std_out.flush();
    if (!std_out) throw IoError("cannot write standard output");
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f.write(data, static_cast<std::streamsize>(size));
  if (!f) throw IoError("cannot write " + path);
}

EncodedDictionary load(const std::string& path, std::istream& std_in) {
  const std::string raw = read_all(path, std_in);
  const auto* p = reinterpret_cast<const std::uint8_t*>(raw.data());
  return deserialize(std::span<const std::uint8_t>(p, raw.size()));
}

std::string decompress_text(const EncodedDictionary& dict) {
  const Slp g = dict.decode();
  const auto v = validate(g);
  if (!v.ok()) throw CorruptError("container: decoded grammar is invalid (" + *v.error + ")");
  return expand(g);
}

// Maps exceptions to exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "slpz: " << e.what() << '\n';
    return kIoError;
  } catch (const FormatError& e) {
    err << "slpz: malformed container: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::ios_base::failure& e) {
    err << "slpz: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "slpz: " << e.what() << '\n';
    return kUsageError;
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int cmd_compress(const std::string& input, const std::string& output, Streams io) {
  return guarded(io.err, [&] {
    const std::string text = read_all(input, io.in);
    if (text.empty()) {
      io.err << "slpz: input is empty\n";
      return int{kUsageError};
    }
    const auto t0 = std::chrono::steady_clock::now();
    const Slp g = build_slp(text);
    const auto t1 = std::chrono::steady_clock::now();
    const EncodedDictionary dict(bfs_rename(g).grammar);
    const auto t2 = std::chrono::steady_clock::now();
    const auto bytes = serialize(dict);
    write_all(output, io.out, reinterpret_cast<const char*>(bytes.data()), bytes.size());

    if (log_level() >= 1) {
      const SizeReport r = dict.measured_bits();
      io.err << "n=" << r.n << " sigma=" << r.sigma << " m=" << r.m << " rho=" << r.rho
             << " (bound " << rho_bound(r.m) << ")"
             << " payload_bits=" << r.payload_bits() << " directory_bits=" << r.directory_bits()
             << " container_bytes=" << bytes.size() << '\n';
    }
    if (log_level() >= 2) {
      io.err << std::fixed << std::setprecision(3) << "grammar " << std::chrono::duration<double>(t1 - t0).count()
             << "s, encode " << std::chrono::duration<double>(t2 - t1).count() << "s, total " << seconds_since(t0)
             << "s\n";
    }
    return int{kOk};
  });
}

int cmd_decompress(const std::string& input, const std::string& output, Streams io) {
  return guarded(io.err, [&] {
    const std::string text = decompress_text(load(input, io.in));
    write_all(output, io.out, text.data(), text.size());
    return int{kOk};
  });
}

int cmd_access(const std::string& input, unsigned long long rule, Streams io) {
  return guarded(io.err, [&] {
    const EncodedDictionary dict = load(input, io.in);
    if (rule <= dict.sigma() || rule > dict.num_symbols()) {
      io.err << "slpz: rule " << rule << " outside [" << dict.sigma() + 1 << ", " << dict.num_symbols() << "]\n";
      return int{kUsageError};
    }
    const auto k = static_cast<SymbolId>(rule);
    const Rule r = dict.access_rule(k);
    io.out << k << " -> " << r.left << ' ' << r.right << '\n';
    return int{kOk};
  });
}

int cmd_stats(const std::string& input, Streams io) {
  return guarded(io.err, [&] {
    const EncodedDictionary dict = load(input, io.in);
    const SizeReport r = dict.measured_bits();
    auto& out = io.out;
    auto row = [&](const char* name, const ComponentBits& c) {
      out << std::left << std::setw(12) << name << std::right << std::setw(14) << c.payload << std::setw(16)
          << c.directory << '\n';
    };
    out << "symbols (n)        " << r.n << '\n'
        << "terminals (sigma)  " << r.sigma << '\n'
        << "rules (m)          " << r.m << '\n'
        << "subsequences (rho) " << r.rho << "  (bound 2*ceil(sqrt(m)) = " << rho_bound(r.m) << ")\n\n";
    out << std::left << std::setw(12) << "component" << std::right << std::setw(14) << "payload_bits" << std::setw(16)
        << "directory_bits" << '\n';
    row("left_bits", r.left_bits);
    row("big_b", r.big_b);
    row("d_rho", r.d_rho);
    row("d_pi", r.d_pi);
    row("dirs", r.dirs);
    row("total", ComponentBits{r.payload_bits(), r.directory_bits()});

    const std::size_t log_rho = WaveletTree::height_for(std::max<std::size_t>(r.rho, 1));
    out << '\n'
        << "rho part bound 2m*ceil(log2 rho)   " << 2 * r.m * log_rho << " bits\n"
        << "plain 2n*ceil(log2 n)              " << r.plain_bits << " bits\n"
        << std::fixed << std::setprecision(1)
        << "lower bound 2n + log2(n!)          " << r.lower_bound_bits << " bits\n"
        << std::setprecision(4);
    auto ratio = [](double a, double b) { return b > 0 ? a / b : 0.0; };
    out << "payload / plain                    " << ratio(r.payload_bits(), r.plain_bits) << '\n'
        << "payload / lower bound              " << ratio(r.payload_bits(), r.lower_bound_bits) << '\n'
        << "total / lower bound                " << ratio(r.total_bits(), r.lower_bound_bits) << '\n';
    return int{kOk};
  });
}

int cmd_verify(const std::string& input, const std::string& original, Streams io) {
  return guarded(io.err, [&] {
    const EncodedDictionary dict = load(input, io.in);
    const std::string expected = read_all(original, io.in);
    const std::string actual = decompress_text(dict);
    const auto diff = std::mismatch(actual.begin(), actual.end(), expected.begin(), expected.end());
    if (diff.first == actual.end() && diff.second == expected.end()) {
      if (log_level() >= 1) io.err << "ok: " << actual.size() << " bytes match\n";
      return int{kOk};
    }
    io.err << "slpz: mismatch at offset " << (diff.first - actual.begin()) << '\n';
    return int{kMismatch};
  });
}

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Grammar compression with a succinct phrase dictionary", "slpz"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string output = "-";
  std::string original;
  unsigned long long rule = 0;

  auto* compress = app.add_subcommand("compress", "Compress bytes into a container");
  compress->add_option("input", input, "Input file, - for stdin");
  compress->add_option("-o,--output", output, "Output file, - for stdout");

  auto* decompress = app.add_subcommand("decompress", "Restore the original bytes");
  decompress->add_option("input", input, "Container file, - for stdin");
  decompress->add_option("-o,--output", output, "Output file, - for stdout");

  auto* access = app.add_subcommand("access", "Print one rule without decompressing");
  access->add_option("input", input, "Container file, - for stdin");
  access->add_option("--rule", rule, "Variable id K")->required();

  auto* stats = app.add_subcommand("stats", "Report component sizes and bounds");
  stats->add_option("input", input, "Container file, - for stdin");

  auto* verify = app.add_subcommand("verify", "Check a container against the original file");
  verify->add_option("input", input, "Container file, - for stdin");
  verify->add_option("--original", original, "Original file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << "slpz: " << e.what() << '\n' << app.help();
    return kUsageError;
  }

  if (*compress) return cmd_compress(input, output, io);
  if (*decompress) return cmd_decompress(input, output, io);
  if (*access) return cmd_access(input, rule, io);
  if (*stats) return cmd_stats(input, io);
  if (*verify) return cmd_verify(input, original, io);
  return kUsageError;
}

}  // namespace slpz::cli
