// Copyright 2026 The perturbbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERTURBBENCH_HARNESS_CSV_H_
#define PERTURBBENCH_HARNESS_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace perturbbench {

using CsvRow = std::vector<std::string>;

// RFC 4180 quoting: fields containing a comma, quote, CR or LF are quoted.
std::string csv_escape(std::string_view field);
std::string csv_line(const CsvRow& fields);

// Parses CSV text (quoted fields may span lines). Throws ParseError on an
// unterminated quote.
std::vector<CsvRow> parse_csv(std::string_view text);

// Parses the file and checks that the first row equals `header` and that
// every row has as many fields. Throws ParseError / IoError.
std::vector<CsvRow> read_csv_file(const std::string& path,
                                  const CsvRow& header);

// Shortest round-trip text; "nan" for NaN.
std::string csv_number(double value);
double parse_csv_number(const std::string& field);

}  // namespace perturbbench

#endif  // PERTURBBENCH_HARNESS_CSV_H_
