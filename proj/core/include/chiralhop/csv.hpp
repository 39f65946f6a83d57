#pragma once

#include <string>

#include "chiralhop/experiment.hpp"

namespace chiralhop {

// Shortest representation that parses back to the identical double; '.' as
// the decimal separator regardless of locale.
std::string format_double(double v);

// Dynamics time-series CSV ('#' comments, LF line endings):
//   time_us,p100,p010,p001,p_other,sem_p100,sem_p010,sem_p001,xbar_um,ybar_um
// The metadata block is emitted verbatim as comment lines before the header.
std::string series_to_csv(const MeasuredSeries& series, const std::string& metadata);

// Wrap a config echo so a run can be reproduced from the output file alone:
// the block between the config markers, stripped of the leading '# ',
// parses as a config file.
std::string metadata_block(const std::string& command, const std::string& config_text,
                           const MeasuredSeries* series);

// Extract the config text embedded by metadata_block.
std::string extract_embedded_config(const std::string& csv_text);

// Write via a temporary file and rename, so failed runs leave nothing behind.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace chiralhop
