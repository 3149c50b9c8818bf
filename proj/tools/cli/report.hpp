#pragma once

// Tabular results of one CLI run and their three renderings.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "descent/words.hpp"

namespace descent::cli {

enum class Format { table, csv, json };

struct Cell {
  enum class Kind { text, number, integer, flag };
  Kind kind = Kind::text;
  std::string text;  // also the exact rendering of rationals and big integers
  double number = 0;
  bool flag = false;
};

Cell text(std::string s);
Cell number(double x);
Cell integer(long long x);
Cell exact(const Rational& q);
Cell exact(const BigInt& z);
Cell flag(bool b);

/// %.12g; "-0" prints as "0".
std::string format_number(double x);

struct Report {
  std::string command;
  std::string scheme;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;
  std::vector<std::string> notes;
  bool ok = true;
};

void render(const Report& report, Format format, std::ostream& out);

}  // namespace descent::cli
