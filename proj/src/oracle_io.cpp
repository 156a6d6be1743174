#include "vcq/oracle_io.hpp"

#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "vcq/errors.hpp"

namespace vcq {

namespace {

constexpr char kMagic[4] = {'V', 'C', 'Q', 'O'};

class Writer {
public:
    void u8(std::uint8_t x) { out_.push_back(static_cast<char>(x)); }
    void u32(std::uint32_t x) {
        for (int i = 0; i < 4; ++i) out_.push_back(static_cast<char>((x >> (8 * i)) & 0xFFu));
    }
    void size(std::size_t x) {
        if (x > 0xFFFFFFFFull) throw std::length_error("value does not fit the 32-bit oracle format");
        u32(static_cast<std::uint32_t>(x));
    }
    void raw(const char* data, std::size_t len) { out_.append(data, len); }
    std::string take() { return std::move(out_); }

private:
    std::string out_;
};

class Reader {
public:
    explicit Reader(std::string_view bytes) : bytes_(bytes) {}

    std::uint8_t u8() {
        need(1);
        return static_cast<std::uint8_t>(bytes_[pos_++]);
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t x = 0;
        for (int i = 0; i < 4; ++i) x |= std::uint32_t{static_cast<std::uint8_t>(bytes_[pos_ + i])} << (8 * i);
        pos_ += 4;
        return x;
    }
    // Count prefix for `each`-byte records; rejects counts larger than the input.
    std::uint32_t count(std::size_t each) {
        const std::uint32_t c = u32();
        if (each != 0 && c > (bytes_.size() - pos_) / each) throw FormatError("oracle file truncated");
        return c;
    }
    std::string_view raw(std::size_t len) {
        need(len);
        std::string_view out = bytes_.substr(pos_, len);
        pos_ += len;
        return out;
    }
    bool done() const noexcept { return pos_ == bytes_.size(); }

private:
    void need(std::size_t len) const {
        if (bytes_.size() - pos_ < len) throw FormatError("oracle file truncated");
    }

    std::string_view bytes_;
    std::size_t pos_ = 0;
};

void header(Writer& w, OracleMode mode, std::size_t k, std::size_t n) {
    w.raw(kMagic, 4);
    w.u32(kOracleFormatVersion);
    w.u8(static_cast<std::uint8_t>(mode));
    w.size(k);
    w.size(n);
}

void write_cuts(Writer& w, std::span<const Cut> cuts) {
    w.size(cuts.size());
    for (const Cut& c : cuts) {
        w.size(c.vertices.size());
        for (NodeId v : c.vertices) w.u32(v);
        w.size(c.edges.size());
        for (const Edge& e : c.edges) {
            w.u32(e.u);
            w.u32(e.v);
        }
    }
}

std::vector<Cut> read_cuts(Reader& r) {
    std::vector<Cut> cuts(r.count(8));
    for (Cut& c : cuts) {
        std::vector<NodeId> vertices(r.count(4));
        for (NodeId& v : vertices) v = r.u32();
        std::vector<Edge> edges(r.count(8));
        for (Edge& e : edges) {
            const NodeId a = r.u32();
            const NodeId b = r.u32();
            if (a == b) throw FormatError("cut edge is a self-loop");
            e = Edge(a, b);
        }
        c = Cut(std::move(vertices), std::move(edges));
    }
    return cuts;
}

std::vector<std::uint32_t> read_u32s(Reader& r, std::size_t count) {
    if (count > (std::size_t{1} << 40)) throw FormatError("oracle table too large");
    const std::string_view raw = r.raw(count * 4);
    std::vector<std::uint32_t> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::uint32_t x = 0;
        for (int b = 0; b < 4; ++b) x |= std::uint32_t{static_cast<std::uint8_t>(raw[4 * i + b])} << (8 * b);
        out[i] = x;
    }
    return out;
}

}  // namespace

std::string serialize(const KConnOracle& o) {
    Writer w;
    header(w, OracleMode::kKConn, o.k(), o.n());
    write_cuts(w, o.cuts());
    for (CutId id : o.incident_cuts()) w.u32(id);
    w.size(o.critical_edges().size());
    for (const CriticalEdge& c : o.critical_edges()) {
        w.u32(c.edge.u);
        w.u32(c.edge.v);
        w.u32(c.cut);
    }
    for (const SourceRecord& rec : o.records()) {
        w.u32(rec.forest);
        w.u32(rec.node);
        w.u32(rec.cut);
    }
    w.size(o.forests().size());
    for (const LaminarForest& f : o.forests()) {
        w.size(f.size());
        for (TreeNodeId p : f.parents()) w.u32(p);
        for (std::uint32_t x : f.dfs_in()) w.u32(x);
        for (std::uint32_t x : f.dfs_out()) w.u32(x);
        for (TreeNodeId x : f.psi_map()) w.u32(x);
    }
    return w.take();
}

std::string serialize(const GeneralOracle& o) {
    Writer w;
    header(w, OracleMode::kGeneral, o.k(), o.n());
    write_cuts(w, o.cuts());
    const auto kappa = o.kappa_matrix();
    w.raw(reinterpret_cast<const char*>(kappa.data()), kappa.size());
    for (CutId id : o.cut_matrix()) w.u32(id);
    return w.take();
}

std::string serialize(const Oracle& oracle) {
    return std::visit([](const auto& o) { return serialize(o); }, oracle);
}

Oracle deserialize(std::string_view bytes) {
    Reader r(bytes);
    if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) throw FormatError("not an oracle file (bad magic)");
    r.raw(4);
    const std::uint32_t version = r.u32();
    if (version != kOracleFormatVersion) {
        throw FormatError("unknown oracle format version " + std::to_string(version));
    }
    const std::uint8_t mode = r.u8();
    const std::size_t k = r.u32();
    const std::size_t n = r.u32();
    std::vector<Cut> cuts = read_cuts(r);

    try {
        if (mode == static_cast<std::uint8_t>(OracleMode::kKConn)) {
            std::vector<CutId> incident = read_u32s(r, n);
            std::vector<CriticalEdge> critical(r.count(12));
            for (CriticalEdge& c : critical) {
                const NodeId u = r.u32();
                const NodeId v = r.u32();
                if (u >= v) throw FormatError("critical edge not in canonical order");
                c.edge = Edge(u, v);
                c.cut = r.u32();
            }
            std::vector<SourceRecord> records(n);
            for (SourceRecord& rec : records) {
                rec.forest = r.u32();
                rec.node = r.u32();
                rec.cut = r.u32();
            }
            std::vector<LaminarForest> forests(r.count(4));
            for (LaminarForest& f : forests) {
                const std::size_t size = r.count(12);
                auto parent = read_u32s(r, size);
                auto dfs_in = read_u32s(r, size);
                auto dfs_out = read_u32s(r, size);
                auto psi = read_u32s(r, n);
                f = LaminarForest::from_parts(std::move(parent), std::move(dfs_in), std::move(dfs_out), std::move(psi));
            }
            if (!r.done()) throw FormatError("trailing bytes after oracle");
            return KConnOracle::from_parts(k, n, std::move(cuts), std::move(incident), std::move(critical),
                                           std::move(records), std::move(forests));
        }
        if (mode == static_cast<std::uint8_t>(OracleMode::kGeneral)) {
            const std::string_view raw = r.raw(n * n);
            std::vector<std::uint8_t> kappa(raw.begin(), raw.end());
            std::vector<CutId> ids = read_u32s(r, n * n);
            if (!r.done()) throw FormatError("trailing bytes after oracle");
            return GeneralOracle::from_parts(k, n, std::move(cuts), std::move(kappa), std::move(ids));
        }
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("inconsistent oracle file: ") + e.what());
    }
    throw FormatError("unknown oracle mode " + std::to_string(mode));
}

void save_oracle(const Oracle& oracle, const std::string& path) {
    const std::string bytes = serialize(oracle);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write oracle file " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("failed writing oracle file " + path);
}

Oracle load_oracle(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open oracle file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return deserialize(buf.str());
}

}  // namespace vcq
