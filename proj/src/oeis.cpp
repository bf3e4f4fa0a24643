#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "seqlab/oeis.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <httplib.h>

#include "seqlab/errors.hpp"

namespace fs = std::filesystem;

namespace seqlab::oeis {

const mpz_class& Sequence::at(long long n) const {
    long long i = n - offset;
    if (i < 0 || i >= static_cast<long long>(terms.size()))
        throw std::out_of_range("sequence index " + std::to_string(n) + " out of range");
    return terms[static_cast<std::size_t>(i)];
}

Sequence parse_bfile(std::string_view text) {
    Sequence s;
    std::size_t lineno = 0;
    bool have_first = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++lineno;

        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string_view::npos) continue;  // blank
        if (line[b] == '#') continue;               // comment

        std::istringstream iss{std::string(line)};
        long long idx;
        std::string value;
        if (!(iss >> idx >> value))
            throw parse_error("malformed b-file line", lineno);
        std::string rest;
        if (iss >> rest)
            throw parse_error("trailing garbage on b-file line", lineno);
        mpz_class v;
        if (mpz_set_str(v.get_mpz_t(), value.c_str(), 10) != 0)
            throw parse_error("bad integer '" + value + "'", lineno);

        if (!have_first) {
            s.offset = idx;
            have_first = true;
        } else if (idx != s.offset + static_cast<long long>(s.terms.size())) {
            throw parse_error("non-contiguous index " + std::to_string(idx), lineno);
        }
        s.terms.push_back(std::move(v));
    }
    if (s.terms.empty()) throw parse_error("no terms found", lineno);
    return s;
}

std::string serialize_bfile(const Sequence& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.terms.size(); ++i)
        out << s.offset + static_cast<long long>(i) << ' ' << s.terms[i].get_str() << '\n';
    return out.str();
}

CompareReport compare(const Sequence& computed, const Sequence& reference) {
    long long lo = std::max(computed.offset, reference.offset);
    long long hi = std::min(computed.last_index(), reference.last_index());
    if (lo > hi) throw std::invalid_argument("sequences have no overlapping index range");

    CompareReport r;
    r.overlap = static_cast<std::size_t>(hi - lo + 1);
    for (long long n = lo; n <= hi; ++n) {
        if (computed.at(n) != reference.at(n)) {
            r.match = false;
            r.mismatch_index = n;
            r.lhs = computed.at(n);
            r.rhs = reference.at(n);
            return r;
        }
    }
    r.match = true;
    return r;
}

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool valid_id(const std::string& id) {
    if (id.size() != 7 || (id[0] != 'A' && id[0] != 'a')) return false;
    for (std::size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    return true;
}

}  // namespace

Sequence load_fixture(const std::string& id, const std::string& data_dir) {
    fs::path p = fs::path(data_dir) / "fixtures" / "bfiles" / (id + ".txt");
    if (!fs::exists(p))
        throw std::runtime_error("missing fixture for " + id + " (looked in " + p.string() + ")");
    Sequence s = parse_bfile(read_file(p));
    s.id = id;
    return s;
}

Sequence fetch_bfile(const std::string& id, const FetchOptions& opts) {
    if (!valid_id(id)) throw std::invalid_argument("malformed OEIS id '" + id + "'");

    if (!opts.cache_dir.empty()) {
        fs::path cached = fs::path(opts.cache_dir) / ("b" + id.substr(1) + ".txt");
        if (fs::exists(cached)) {
            Sequence s = parse_bfile(read_file(cached));
            s.id = id;
            return s;
        }
    }
    if (!opts.data_dir.empty()) {
        fs::path p = fs::path(opts.data_dir) / "fixtures" / "bfiles" / (id + ".txt");
        if (fs::exists(p)) {
            Sequence s = parse_bfile(read_file(p));
            s.id = id;
            return s;
        }
    }
    if (!opts.online)
        throw std::runtime_error("no cached or bundled data for " + id +
                                 " and network fetch is disabled");

    std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
    httplib::SSLClient client("oeis.org");
    client.set_follow_location(true);
    auto res = client.Get(path);
    if (!res || res->status != 200)
        throw std::runtime_error("fetch of " + id + " failed" +
                                 (res ? " (HTTP " + std::to_string(res->status) + ")" : ""));

    Sequence s = parse_bfile(res->body);
    s.id = id;

    if (!opts.cache_dir.empty()) {
        std::error_code ec;
        fs::create_directories(opts.cache_dir, ec);
        fs::path cached = fs::path(opts.cache_dir) / ("b" + id.substr(1) + ".txt");
        fs::path tmp = cached;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
            out << res->body;
        }
        fs::rename(tmp, cached);  // single-writer discipline: last rename wins
    }
    return s;
}

}  // namespace seqlab::oeis
