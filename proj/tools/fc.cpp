// fc: command line front end for the FC-group analysis library.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fcg/report.hpp"

namespace {

int run(const std::string& command, const std::string& group_arg, const std::string& chain_path,
        std::size_t radius, const std::string& output) {
  using fcg::ExitCode;
  try {
    const fcg::io::GroupFile group = fcg::io::load_group(fcg::io::resolve_group(group_arg));
    std::optional<fcg::io::NamedChain> chain;
    std::optional<std::string> chain_digest;
    if (!chain_path.empty()) {
      std::string digest;
      chain = fcg::io::load_chain(chain_path, group, &digest);
      chain_digest = digest;
    }
    const fcg::RunResult r = fcg::run_analysis(command, group, chain, chain_digest, {radius});
    if (output.empty() || output == "-") {
      std::cout << r.report;
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out || !(out << r.report)) throw fcg::IoError("cannot write " + output);
    }
    std::cerr << "fc " << command << ": " << r.summary << '\n';
    return static_cast<int>(r.exit);
  } catch (const fcg::IoError& e) {
    std::cerr << "fc: " << e.what() << '\n';
    return static_cast<int>(ExitCode::IoOrSchema);
  } catch (const fcg::InputError& e) {
    std::cerr << "fc: " << e.what() << '\n';
    return static_cast<int>(ExitCode::IoOrSchema);
  } catch (const fcg::PreconditionError& e) {
    std::cerr << "fc: " << e.what() << '\n';
    return static_cast<int>(ExitCode::ValidationFailure);
  } catch (const fcg::Error& e) {
    std::cerr << "fc: " << e.what() << '\n';
    return static_cast<int>(ExitCode::ComputationAbort);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze FC-centralizers, bounded FC-chains and their nilpotent towers"};
  app.require_subcommand(1);
  std::string group_arg, chain_path, output;
  std::size_t radius = 6;
  for (const auto& name : fcg::commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("group", group_arg, "group file, or the name of a bundled fixture")->required();
    sub->add_option("--chain", chain_path, "chain file (fc-chain/1); defaults to the group's bundled chains");
    sub->add_option("--max-ball-radius", radius, "ball radius for oracle cross-checks")->check(CLI::Range(1, 12));
    sub->add_option("--output", output, "write the report here instead of stdout");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // usage errors share the exit status of malformed input
    return app.exit(e) == 0 ? 0 : static_cast<int>(fcg::ExitCode::IoOrSchema);
  }
  const std::string command = app.get_subcommands().front()->get_name();
  return run(command, group_arg, chain_path, radius, output);
}
