#include "thomschur/variable.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace thomschur {

namespace {

// rank in the global variable order; ties broken by name
std::pair<int, std::string> order_key(const std::string& name)
{
    auto indexed = [&](char c, int base) -> int {
        if (name.size() < 2 || name[0] != c)
            return -1;
        for (std::size_t i = 1; i < name.size(); ++i)
            if (name[i] < '0' || name[i] > '9')
                return -1;
        return base + std::stoi(name.substr(1));
    };
    if (name == "x")
        return {0, name};
    if (int k = indexed('x', 10); k >= 0)
        return {k, name};
    if (int k = indexed('a', 1000); k >= 0)
        return {k, name};
    if (int k = indexed('b', 2000); k >= 0)
        return {k, name};
    if (int k = indexed('y', 3000); k >= 0)
        return {k, name};
    if (name == "z")
        return {900000, name};
    return {1000000, name};
}

struct Registry {
    std::mutex mtx;
    std::vector<std::string> names;
    std::vector<std::pair<int, std::string>> keys;
    std::map<std::string, VarId> by_name;
};

Registry& registry()
{
    static Registry r;
    return r;
}

} // namespace

VarId var(const std::string& name)
{
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mtx);
    auto it = r.by_name.find(name);
    if (it != r.by_name.end())
        return it->second;
    VarId id = static_cast<VarId>(r.names.size());
    r.names.push_back(name);
    r.keys.push_back(order_key(name));
    r.by_name.emplace(name, id);
    return id;
}

const std::string& var_name(VarId id)
{
    return registry().names[static_cast<std::size_t>(id)];
}

bool var_precedes(VarId u, VarId v)
{
    const Registry& r = registry();
    return r.keys[static_cast<std::size_t>(u)] < r.keys[static_cast<std::size_t>(v)];
}

} // namespace thomschur
