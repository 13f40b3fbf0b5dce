#include "fspace/fingerprint.hpp"

#include <fstream>

#include "fspace/error.hpp"

namespace fspace {

std::string to_hex(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

std::string Fingerprint::hex() const { return to_hex(hash_); }

std::uint64_t fingerprint_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file for fingerprinting: " + path);
    Fingerprint fp;
    char buf[65536];
    while (in.read(buf, sizeof buf) || in.gcount() > 0)
        fp.update(buf, static_cast<std::size_t>(in.gcount()));
    return fp.value();
}

}  // namespace fspace
