#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "fieldevo/synthetic.hpp"

int main(int argc, char** argv) {
  fieldevo::SyntheticConfig cfg;
  std::string out_path;
  std::string years = "1991:2019";
  std::string format = "tsv";
  CLI::App app{"Generate a synthetic drifting-keyword corpus", "fieldevo-synth"};
  app.add_option("--out", out_path, "Output file")->required();
  app.add_option("--fields", cfg.fields, "Field codes")->delimiter(',');
  app.add_option("--years", years, "Inclusive year range A:B");
  app.add_option("--records-per-year", cfg.records_per_year, "Records per field and year");
  app.add_option("--vocab", cfg.active_vocab, "Active keywords per field");
  app.add_option("--drift", cfg.initial_drift, "Initial drift share");
  app.add_option("--decay", cfg.drift_decay, "Drift decay per year");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--format", format, "tsv or jsonl")->check(CLI::IsMember({"tsv", "jsonl"}));
  CLI11_PARSE(app, argc, argv);

  const auto colon = years.find(':');
  if (colon == std::string::npos) {
    std::cerr << "--years must be A:B\n";
    return 2;
  }
  cfg.years = {std::stoi(years.substr(0, colon)), std::stoi(years.substr(colon + 1))};
  if (cfg.years.empty()) {
    std::cerr << "empty year range\n";
    return 2;
  }

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << '\n';
    return 1;
  }
  const auto records = fieldevo::generate_corpus(cfg);
  fieldevo::write_records(out, records,
                          format == "jsonl" ? fieldevo::InputFormat::kJsonl
                                            : fieldevo::InputFormat::kTsv);
  std::cout << records.size() << " records written to " << out_path << '\n';
  return 0;
}
