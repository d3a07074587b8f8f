#include "qmex/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qmex/errors.hpp"

namespace qmex {

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw Error("double formatting failed");
    return std::string(buf, end);
}

std::string coefficient_csv(const CoefficientCloud& cloud) {
    std::ostringstream out;
    out << "draw_id,n1,n2,re,im\n";
    for (std::size_t d = 0; d < cloud.draws.size(); ++d)
        for (int n1 = -1; n1 <= 1; ++n1)
            for (int n2 = -1; n2 <= 1; ++n2) {
                const cx c = cloud.draws[d].spectrum.c(n1, n2);
                out << d << ',' << n1 << ',' << n2 << ',' << format_double(c.real()) << ','
                    << format_double(c.imag()) << '\n';
            }
    return out.str();
}

std::string prediction_map_csv(const std::vector<std::array<double, 4>>& map) {
    std::ostringstream out;
    out << "x1,x2,y_teacher,y_student\n";
    for (const auto& row : map)
        out << format_double(row[0]) << ',' << format_double(row[1]) << ','
            << format_double(row[2]) << ',' << format_double(row[3]) << '\n';
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << content;
    if (!f) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace qmex
