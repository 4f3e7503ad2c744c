#include "qhc/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qhc::pauli {

namespace {

constexpr int max_qubits = 16;

void check_qubit_count(int n) {
    if (n < 1 || n > max_qubits) {
        throw std::invalid_argument("PauliString: qubit count must be in [1, " +
                                    std::to_string(max_qubits) + "], got " + std::to_string(n));
    }
}

int popcount64(std::uint64_t v) { return std::popcount(v); }

}  // namespace

PauliString::PauliString(int n) : PauliString(n, 0, 0, 0) {}

PauliString::PauliString(int n, std::uint64_t x_bits, std::uint64_t z_bits, int sign_exponent)
    : n_(n), x_(x_bits), z_(z_bits), q_(((sign_exponent % 4) + 4) % 4) {
    check_qubit_count(n);
    const std::uint64_t mask = (n == 64) ? ~0ull : ((1ull << n) - 1);
    if ((x_ & ~mask) != 0 || (z_ & ~mask) != 0) {
        throw std::invalid_argument("PauliString: mask bits outside the qubit range");
    }
}

PauliString PauliString::from_label(std::string_view label) {
    int q = 0;
    if (!label.empty() && (label[0] == '+' || label[0] == '-')) {
        const bool neg = label[0] == '-';
        label.remove_prefix(1);
        // Lowercase 'i' marks an imaginary sign tag; uppercase 'I' is the
        // identity letter, so "-IX" and "-iX" stay distinguishable.
        if (!label.empty() && label[0] == 'i') {
            q = neg ? 3 : 1;
            label.remove_prefix(1);
        } else {
            q = neg ? 2 : 0;
        }
    }
    if (label.empty()) {
        throw std::invalid_argument("PauliString: empty label");
    }
    const int n = static_cast<int>(label.size());
    check_qubit_count(n);
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t bit = 1ull << (n - 1 - i);
        switch (label[i]) {
            case 'I': break;
            case 'X': x |= bit; break;
            case 'Z': z |= bit; break;
            case 'Y': x |= bit; z |= bit; break;
            default:
                throw std::invalid_argument(std::string("PauliString: invalid label character '") +
                                            label[i] + "'");
        }
    }
    return PauliString(n, x, z, q);
}

std::complex<double> PauliString::sign() const {
    static const std::complex<double> phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return phases[q_];
}

int PauliString::weight() const { return popcount64(x_ | z_); }

std::string PauliString::label() const {
    static const char* prefixes[4] = {"", "+i", "-", "-i"};
    std::string out = prefixes[q_];
    for (int i = 0; i < n_; ++i) {
        const std::uint64_t bit = 1ull << (n_ - 1 - i);
        const int xi = (x_ & bit) ? 1 : 0;
        const int zi = (z_ & bit) ? 1 : 0;
        out += "IXZY"[xi + 2 * zi];
    }
    return out;
}

PauliString PauliString::operator*(const PauliString& other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("PauliString: product of strings on different qubit counts");
    }
    const std::uint64_t x3 = x_ ^ other.x_;
    const std::uint64_t z3 = z_ ^ other.z_;
    // Quarter phases from the i^{xz} factors of the two operands and the
    // result, plus the ZX reorderings across the product.
    const int t = popcount64(x_ & z_) + popcount64(other.x_ & other.z_) -
                  popcount64(x3 & z3) + 2 * popcount64(z_ & other.x_);
    return PauliString(n_, x3, z3, q_ + other.q_ + t);
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("PauliString: commutation of strings on different qubit counts");
    }
    const int overlap = popcount64(x_ & other.z_) + popcount64(z_ & other.x_);
    return overlap % 2 == 0;
}

bool PauliString::same_string(const PauliString& other) const {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

std::pair<std::complex<double>, std::uint64_t> PauliString::apply_to_basis_state(
    std::uint64_t idx) const {
    // P|c> = i^q * i^{popcount(x & z)} * (-1)^{popcount(z & c)} |c xor x>.
    int phase = q_ + popcount64(x_ & z_) + 2 * popcount64(z_ & idx);
    static const std::complex<double> phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return {phases[((phase % 4) + 4) % 4], idx ^ x_};
}

Eigen::MatrixXcd PauliString::to_dense() const {
    const std::uint64_t dim = 1ull << n_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::uint64_t c = 0; c < dim; ++c) {
        auto [phase, row] = apply_to_basis_state(c);
        m(row, c) = phase;
    }
    return m;
}

std::vector<PauliString> all_strings(int n) {
    check_qubit_count(n);
    const std::uint64_t dim = 1ull << n;
    std::vector<PauliString> out;
    out.reserve((dim * dim) - 1);
    for (std::uint64_t x = 0; x < dim; ++x) {
        for (std::uint64_t z = 0; z < dim; ++z) {
            if (x == 0 && z == 0) continue;
            out.emplace_back(n, x, z, 0);
        }
    }
    return out;
}

}
