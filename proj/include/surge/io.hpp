// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace surge {

/// 12 significant digits, the precision of every emitted energy.
std::string format_energy(double v);

/// RFC 4180 field: quoted when it contains a comma, quote, or line break.
std::string csv_field(std::string_view s);
std::string csv_row(const std::vector<std::string>& fields);

/// Splits RFC 4180 text into rows of unquoted fields.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace surge
