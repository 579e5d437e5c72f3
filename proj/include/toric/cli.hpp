#pragma once

// Command implementations behind the `toricsc` tool. Each command returns its
// exit status and the exact bytes destined for stdout and stderr, so the
// commands are testable without spawning processes.
//
// Exit statuses: 0 ok, 1 domain failure, 2 I/O or parse error, 3 internal
// invariant breach (e.g. a witness that fails re-verification).

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace toric::cli {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

struct ClassifyOptions {
  bool walls = false;
  bool timings = false;
};

enum class CorpusMode { Theorem1, Question4 };

struct CorpusOptions {
  CorpusMode mode = CorpusMode::Theorem1;
  std::size_t budget = 1000;
  std::uint64_t seed = 42;
};

CommandResult cmd_validate(const std::filesystem::path& path);
CommandResult cmd_classify(const std::filesystem::path& path, const ClassifyOptions& options = {});
CommandResult cmd_dagger(const std::filesystem::path& path);
CommandResult cmd_seshadri(const std::filesystem::path& path);
CommandResult cmd_pcols(const std::filesystem::path& path);
/// `divisor` is a comma-separated list of rationals, an inline
/// {"divisor": [...]} document, or a path to such a document.
CommandResult cmd_nef(const std::filesystem::path& path, const std::string& divisor);
CommandResult cmd_walls(const std::filesystem::path& path);
/// Families: pn <n> | wps <q0,...,qn> | hirzebruch <r> | product <a> <b> |
/// star <fan> <v0,...>. Writes to `out` when given, else to stdout.
CommandResult cmd_gen(const std::string& family, const std::vector<std::string>& params,
                      const std::optional<std::filesystem::path>& out);
CommandResult cmd_corpus(const std::filesystem::path& dir, const CorpusOptions& options);

/// Full command line, as invoked by main().
CommandResult run(int argc, const char* const* argv);

}  // namespace toric::cli
