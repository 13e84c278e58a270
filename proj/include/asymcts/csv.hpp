#ifndef ASYMCTS_CSV_HPP
#define ASYMCTS_CSV_HPP

#include <cstdio>
#include <ostream>
#include <string>

namespace asymcts {

// Floats in every CSV are rendered with 6 significant digits, LF endings.
inline std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::string(buf);
}

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    CsvWriter& field(const std::string& s) {
        sep();
        os_ << s;
        return *this;
    }
    CsvWriter& field(double v) { return field(csv_double(v)); }
    CsvWriter& field(long long v) {
        sep();
        os_ << v;
        return *this;
    }
    CsvWriter& field(int v) { return field(static_cast<long long>(v)); }

    void endrow() {
        os_ << '\n';
        first_ = true;
    }

private:
    void sep() {
        if (!first_) os_ << ',';
        first_ = false;
    }
    std::ostream& os_;
    bool first_ = true;
};

}  // namespace asymcts

#endif  // ASYMCTS_CSV_HPP
