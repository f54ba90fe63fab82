#include "recon/mesh.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "recon/errors.hpp"

namespace recon {

namespace {

std::pair<int, int> norm_edge(int a, int b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

struct Token {
    std::string text;
    int line;
};

// Tokenize, dropping blank lines and '#' comments.
std::vector<Token> tokenize(std::istream& in) {
    std::vector<Token> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) out.push_back({tok, lineno});
    }
    return out;
}

double parse_double(const Token& t, const std::string& what) {
    try {
        std::size_t used = 0;
        double v = std::stod(t.text, &used);
        if (used != t.text.size()) throw std::invalid_argument(t.text);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(t.line) + ": expected " +
                         what + ", got '" + t.text + "'");
    }
}

long parse_long(const Token& t, const std::string& what) {
    try {
        std::size_t used = 0;
        long v = std::stol(t.text, &used);
        if (used != t.text.size()) throw std::invalid_argument(t.text);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(t.line) + ": expected " +
                         what + ", got '" + t.text + "'");
    }
}

} // namespace

void Mesh::buildAdjacency() {
    adj_.assign(n_, {});
    for (const auto& [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Mesh Mesh::fromFaces(std::vector<Vec3> positions,
                     std::vector<std::vector<int>> faces) {
    Mesh m;
    m.n_ = static_cast<int>(positions.size());
    m.pos_ = std::move(positions);
    m.has_pos_ = true;

    std::map<std::pair<int, int>, int> edge_faces;
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        const auto& f = faces[fi];
        if (f.size() < 3)
            throw ParseError("face " + std::to_string(fi) +
                             " has fewer than 3 vertices");
        std::set<int> seen;
        for (int v : f) {
            if (v < 0 || v >= m.n_)
                throw ParseError("face " + std::to_string(fi) +
                                 " references vertex " + std::to_string(v) +
                                 " of " + std::to_string(m.n_));
            if (!seen.insert(v).second)
                throw ParseError("face " + std::to_string(fi) +
                                 " repeats vertex " + std::to_string(v));
        }
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto e = norm_edge(f[i], f[(i + 1) % f.size()]);
            int c = ++edge_faces[e];
            if (c > 2)
                throw ParseError("non-manifold edge (" +
                                 std::to_string(e.first) + "," +
                                 std::to_string(e.second) + "): " +
                                 std::to_string(c) + " incident faces");
        }
    }
    m.faces_ = std::move(faces);
    m.edges_.reserve(edge_faces.size());
    for (const auto& [e, c] : edge_faces) m.edges_.push_back(e);
    m.buildAdjacency();
    return m;
}

Mesh Mesh::fromEdges(int vertex_count,
                     const std::vector<std::pair<int, int>>& edges,
                     std::vector<Vec3> positions) {
    Mesh m;
    m.n_ = vertex_count;
    if (!positions.empty()) {
        if (static_cast<int>(positions.size()) != vertex_count)
            throw InputError("position count does not match vertex count");
        m.pos_ = std::move(positions);
        m.has_pos_ = true;
    }
    std::set<std::pair<int, int>> uniq;
    for (auto [a, b] : edges) {
        if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count)
            throw InputError("edge endpoint out of range");
        if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
        uniq.insert(norm_edge(a, b));
    }
    m.edges_.assign(uniq.begin(), uniq.end());
    m.buildAdjacency();
    return m;
}

bool Mesh::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Mesh::connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

double Mesh::edgeLength(int u, int v) const {
    if (!has_pos_)
        throw UnsupportedError("mesh has no vertex positions");
    const Vec3& a = pos_[u];
    const Vec3& b = pos_[v];
    double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

namespace {

Mesh parse_off(std::istream& in) {
    auto toks = tokenize(in);
    std::size_t p = 0;
    auto next = [&](const std::string& what) -> const Token& {
        if (p >= toks.size())
            throw ParseError("unexpected end of file, expected " + what);
        return toks[p++];
    };
    const Token& magic = next("OFF header");
    if (magic.text != "OFF")
        throw ParseError("line " + std::to_string(magic.line) +
                         ": expected OFF header, got '" + magic.text + "'");
    long nv = parse_long(next("vertex count"), "vertex count");
    long nf = parse_long(next("face count"), "face count");
    parse_long(next("edge count"), "edge count"); // informational, may be 0
    if (nv < 0 || nf < 0) throw ParseError("negative count in OFF header");

    std::vector<Vec3> pos(static_cast<std::size_t>(nv));
    for (long i = 0; i < nv; ++i) {
        pos[i].x = parse_double(next("x coordinate"), "x coordinate");
        pos[i].y = parse_double(next("y coordinate"), "y coordinate");
        pos[i].z = parse_double(next("z coordinate"), "z coordinate");
    }
    std::vector<std::vector<int>> faces(static_cast<std::size_t>(nf));
    for (long i = 0; i < nf; ++i) {
        long k = parse_long(next("face vertex count"), "face vertex count");
        if (k < 3)
            throw ParseError("face " + std::to_string(i) +
                             " has fewer than 3 vertices");
        faces[i].resize(k);
        for (long j = 0; j < k; ++j) {
            long v = parse_long(next("face vertex index"), "face vertex index");
            if (v < 0 || v >= nv)
                throw ParseError("face " + std::to_string(i) +
                                 " references vertex " + std::to_string(v) +
                                 " of " + std::to_string(nv));
            faces[i][j] = static_cast<int>(v);
        }
    }
    if (p != toks.size())
        throw ParseError("line " + std::to_string(toks[p].line) +
                         ": trailing data after faces");
    return Mesh::fromFaces(std::move(pos), std::move(faces));
}

Mesh parse_obj(std::istream& in, std::vector<std::string>* warnings) {
    std::vector<Vec3> pos;
    std::vector<std::vector<int>> faces;
    std::set<std::string> warned;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string dir;
        if (!(ls >> dir)) continue;
        if (dir == "v") {
            Vec3 v;
            if (!(ls >> v.x >> v.y >> v.z))
                throw ParseError("line " + std::to_string(lineno) +
                                 ": malformed vertex");
            pos.push_back(v);
        } else if (dir == "f") {
            std::vector<int> f;
            std::string tok;
            while (ls >> tok) {
                // accept "i", "i/t", "i/t/n"
                std::size_t slash = tok.find('/');
                if (slash != std::string::npos) tok.resize(slash);
                long v;
                try {
                    std::size_t used = 0;
                    v = std::stol(tok, &used);
                    if (used != tok.size()) throw std::invalid_argument(tok);
                } catch (const std::exception&) {
                    throw ParseError("line " + std::to_string(lineno) +
                                     ": malformed face index '" + tok + "'");
                }
                if (v < 1 || v > static_cast<long>(pos.size()))
                    throw ParseError("line " + std::to_string(lineno) +
                                     ": face references vertex " +
                                     std::to_string(v) + " of " +
                                     std::to_string(pos.size()));
                f.push_back(static_cast<int>(v - 1));
            }
            if (f.size() < 3)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": face has fewer than 3 vertices");
            faces.push_back(std::move(f));
        } else {
            if (warnings && warned.insert(dir).second)
                warnings->push_back("ignored OBJ directive '" + dir + "'");
        }
    }
    return Mesh::fromFaces(std::move(pos), std::move(faces));
}

} // namespace

Mesh load_mesh(const std::string& path, MeshFormat format,
               std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open mesh file: " + path);
    try {
        return format == MeshFormat::off ? parse_off(in)
                                         : parse_obj(in, warnings);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_mesh(const Mesh& mesh, const std::string& path) {
    if (!mesh.hasPositions())
        throw UnsupportedError("cannot save a mesh without positions");
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << "OFF\n"
        << mesh.vertexCount() << ' ' << mesh.faces().size() << ' '
        << mesh.edgeCount() << '\n';
    char buf[96];
    for (int v = 0; v < mesh.vertexCount(); ++v) {
        const Vec3& p = mesh.position(v);
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", p.x, p.y, p.z);
        out << buf;
    }
    for (const auto& f : mesh.faces()) {
        out << f.size();
        for (int v : f) out << ' ' << v;
        out << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

int euler_characteristic(const Mesh& mesh, const std::vector<int>& subset) {
    if (!mesh.hasFaces())
        throw UnsupportedError(
            "euler_characteristic requires a mesh with faces");
    std::vector<char> in(mesh.vertexCount(), 0);
    int v_count = 0;
    for (int v : subset) {
        if (v < 0 || v >= mesh.vertexCount())
            throw InputError("subset vertex out of range: " +
                             std::to_string(v));
        if (!in[v]) {
            in[v] = 1;
            ++v_count;
        }
    }
    int e_count = 0;
    for (const auto& [a, b] : mesh.edges())
        if (in[a] && in[b]) ++e_count;
    int f_count = 0;
    for (const auto& f : mesh.faces()) {
        bool all = true;
        for (int v : f)
            if (!in[v]) {
                all = false;
                break;
            }
        if (all) ++f_count;
    }
    return v_count - e_count + f_count;
}

} // namespace recon
