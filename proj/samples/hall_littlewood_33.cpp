// Schur expansion of the modified Hall-Littlewood polynomial of the (3,3)
// partition diagram, computed two ways.

#include <iostream>

#include "yamhall/yamhall.hpp"

int main() {
  using namespace yamhall;
  const Diagram d = parse_diagram_spec("p:3,3");

  const SchurPolynomial from_words = hl_schur(d);
  const SchurPolynomial from_fillings = schur_from_F(hall_littlewood_F(d));

  for (const auto& [lambda, coeff] : from_words.terms())
    std::cout << "s" << lambda.to_string() << "  " << coeff.to_string() << "\n";
  std::cout << (from_words == from_fillings ? "agrees" : "DIFFERS") << " with the filling sum\n";

  std::cout << "\nYamanouchi words of content (2,2,2) that do not jam (3,3):\n";
  for (const auto& w : generate_yam(Partition({2, 2, 2}), d, {.no_jam = true})) std::cout << "  " << format_word(w) << "\n";
  return from_words == from_fillings ? 0 : 1;
}
