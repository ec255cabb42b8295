// Prints where a recorded search response for a query belongs.
#include <CLI11.hpp>
#include <iostream>

#include "factcheck/evidence/search.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Replay fixture key for a search query"};
  std::string query, language = "en", root, adapter;
  app.add_option("query", query, "Query text")->required();
  app.add_option("--lang", language, "Language tag");
  app.add_option("--root", root, "Replay root; prints the full fixture path");
  app.add_option("--adapter", adapter, "Adapter name (with --root)");
  CLI11_PARSE(app, argc, argv);

  if (root.empty()) {
    std::cout << factcheck::evidence::ReplayFixtureKey(query, language) << "\n";
  } else {
    factcheck::evidence::ReplaySearchAdapter replay(adapter.empty() ? "websearch" : adapter, root);
    std::cout << replay.FixturePath(query, language).string() << "\n";
  }
  return 0;
}
