#pragma once

// Explicit character specifications:
//   {"d": 4, "values": [0, 1, 0, -1]}
//   {"d": 13, "order": 6, "exponents": [null, 0, 1, ...]}
//   {"d": 13, "order": 6, "generator": 2, "image": 1}
// Orders above 2 embed at the prime given to the command.

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "qbarnes/characters.hpp"

namespace qbarnes::cli {

inline DirichletCharacter character_from_json(const std::string& text, std::optional<long> prime) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("d")) throw PreconditionError("chi", "character object needs a modulus d");
    const long d = j.at("d").get<long>();
    if (j.contains("values")) return DirichletCharacter::from_values(d, j.at("values").get<std::vector<long>>());
    const long order = j.at("order").get<long>();
    const std::optional<long> embed = order > 2 ? prime : std::nullopt;
    if (j.contains("generator")) {
      return DirichletCharacter::from_generator(d, order, j.at("generator").get<long>(), j.at("image").get<long>(),
                                                embed);
    }
    std::vector<std::optional<long>> exponents;
    for (const auto& e : j.at("exponents")) {
      exponents.push_back(e.is_null() ? std::nullopt : std::optional<long>(e.get<long>()));
    }
    return DirichletCharacter::from_exponents(d, order, std::move(exponents), embed);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError("chi", std::string("malformed character JSON: ") + e.what());
  }
}

/// "trivial:d", "quadratic:d" or an explicit JSON object.
inline DirichletCharacter character_from_text(const std::string& text, std::optional<long> prime) {
  const auto start = text.find_first_not_of(" \t");
  if (start != std::string::npos && text[start] == '{') return character_from_json(text, prime);
  return parse_character_label(text);
}

}  // namespace qbarnes::cli
