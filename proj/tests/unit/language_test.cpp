#include <doctest.h>

#include "factcheck/service/language.hpp"
#include "support/oracles.hpp"

using factcheck::service::LanguageIdentifier;

namespace {

const LanguageIdentifier& Shipped() {
  static const LanguageIdentifier id = LanguageIdentifier::LoadDirectory(oracle::DataDir() / "langprofiles");
  return id;
}

}  // namespace

TEST_CASE("shipped profiles") {
  const auto langs = Shipped().languages();
  for (const char* l : {"en", "no", "da", "sv", "de", "fr", "es"}) {
    CHECK(std::find(langs.begin(), langs.end(), l) != langs.end());
  }
}

TEST_CASE("detects the language of ordinary sentences") {
  CHECK(Shipped().Detect("The committee published its annual report on the state of the roads and bridges in the region.") == "en");
  CHECK(Shipped().Detect("Regjeringen har lagt fram et forslag om å bygge flere veier og jernbaner i Nord-Norge de neste årene.") == "no");
  CHECK(Shipped().Detect("Die Bundesregierung hat beschlossen, die Förderung für den öffentlichen Nahverkehr deutlich zu erhöhen.") == "de");
  CHECK(Shipped().Detect("Le gouvernement a annoncé une nouvelle loi sur la protection de l'environnement et des forêts.") == "fr");
  CHECK(Shipped().Detect("El gobierno anunció que la nueva ley entrará en vigor el próximo año en todas las regiones.") == "es");
  CHECK(Shipped().Detect(oracle::ReadFile(oracle::FixtureDir() / "golden" / "deutschland.txt")) == "de");
}

TEST_CASE("short input falls back to english") {
  CHECK(Shipped().Detect("") == "en");
  CHECK(Shipped().Detect("Hi") == "en");
  CHECK(LanguageIdentifier().Detect("Dette er en ganske lang norsk setning uten profiler.") == "en");
}

TEST_CASE("trigram ranking") {
  // " aaa aaa " has " aa", "aaa" and "aa " twice each; "a a" straddles a word gap.
  const auto t = LanguageIdentifier::RankedTrigrams("aaa, aaa!", 4);
  CHECK(t == std::vector<std::u32string>{U" aa", U"aa ", U"aaa"});
  const auto scores = Shipped().Scores("Der Rhein fließt durch sechs Länder und ist einer der längsten Flüsse Europas.");
  REQUIRE(scores.size() == Shipped().languages().size());
  for (const auto& s : scores) {
    CHECK(s.distance >= 0.0);
    CHECK(s.distance <= 1.0);
  }
}
