#ifndef ICHEB_SVG_HPP
#define ICHEB_SVG_HPP

#include <string>
#include <vector>

namespace icheb {

/// Single-panel line/scatter plot; deterministic byte output for fixed input.
/// Throws std::invalid_argument on an empty series.
std::string emit_plot_svg(const std::vector<std::pair<double, double>>& series,
                          const std::string& x_label, const std::string& y_label);

void write_file(const std::string& path, const std::string& content);

}  // namespace icheb

#endif
