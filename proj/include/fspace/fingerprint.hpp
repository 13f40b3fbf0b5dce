#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

namespace fspace {

// FNV-1a, 64-bit. Used for content fingerprints that tie index parts to
// the inputs that produced them; not a cryptographic hash.
class Fingerprint {
public:
    Fingerprint& update(const void* bytes, std::size_t size) {
        const auto* p = static_cast<const unsigned char*>(bytes);
        for (std::size_t i = 0; i < size; ++i) {
            hash_ ^= p[i];
            hash_ *= 0x100000001b3ULL;
        }
        return *this;
    }

    Fingerprint& update(const std::string& s) { return update(s.data(), s.size()); }

    Fingerprint& update_u64(std::uint64_t v) {
        unsigned char buf[8];
        for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
        return update(buf, 8);
    }

    Fingerprint& update_doubles(std::span<const double> values) {
        for (double v : values) {
            std::uint64_t bits;
            std::memcpy(&bits, &v, 8);
            update_u64(bits);
        }
        return *this;
    }

    std::uint64_t value() const { return hash_; }
    std::string hex() const;

private:
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

std::uint64_t fingerprint_file(const std::string& path);
std::string to_hex(std::uint64_t value);

}  // namespace fspace
