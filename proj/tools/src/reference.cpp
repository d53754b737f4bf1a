#include <einstein/reference.hpp>

namespace einstein {

namespace {

RefRow r5(double x1, double x2, double x3, double v4, double v5, bool scaled = false)
{
    return {{x1, x2, x3, v4, v5}, scaled};
}

RefRow r2(double x1, double x2)
{
    return {{x1, x2}, false};
}

std::vector<RefTable> build()
{
    std::vector<RefTable> t;

    t.push_back({"table1", "two non-isometric metrics, distinct blocks", 1e-4, false, false,
                 {
                     {1, 2, 3, 2, 2, {r5(0.472295, 1.19781, 1, 1.77808, 0.60798), r5(1.49887, 0.714536, 1, 1.14012, 1.55945)}},
                     {1, 2, 4, 2, 2, {r5(1.5978, 0.76303, 1, 1.26653, 1.63504), r5(0.379311, 1.13315, 1, 1.83194, 0.490535)}},
                     {1, 2, 5, 2, 2, {r5(1.66213, 0.796466, 1, 1.36024, 1.6853), r5(0.31734, 1.09462, 1, 1.86425, 0.411959)}},
                     {1, 3, 4, 2, 2, {r5(0.48286, 1.30095, 1, 1.88783, 0.685127), r5(1.48800, 0.636510, 1, 1.21459, 1.47125)}},
                     {1, 3, 5, 2, 2, {r5(1.5613, 0.681659, 1, 1.3168, 1.5272), r5(0.417584, 1.24436, 1, 1.91656, 0.593683)}},
                     {2, 3, 4, 2, 2, {r5(0.676785, 1.49686, 1, 1.9581, 1.03866), r5(1.70003, 0.833603, 1, 1.26452, 2.01911)}},
                     {2, 3, 5, 2, 2, {r5(1.75345, 0.855002, 1, 1.33712, 2.02138), r5(0.586034, 1.41566, 1, 1.98963, 0.899876)}},
                 }});

    t.push_back({"table2", "four non-isometric metrics", 1e-4, false, false,
                 {
                     {3, 4, 5, 4, 4, {r2(0.514582, 0.594076), r2(0.727423, 0.847601), r2(0.761962, 1.65282), r2(1.79298, 0.879305)}},
                     {3, 4, 6, 4, 4, {r2(0.480679, 0.628472), r2(0.646952, 0.857152), r2(0.682517, 1.57948), r2(1.82385, 0.891611)}},
                     {4, 5, 6, 4, 4, {r2(0.499825, 0.558034), r2(0.793644, 0.891443), r2(0.809993, 1.73784), r2(1.84458, 0.904275)}},
                     {5, 6, 7, 4, 4, {r2(0.495154, 0.541631), r2(0.832054, 0.913651), r2(0.841356, 1.79029), r2(1.87675, 0.92032)}},
                 }});

    t.push_back({"table3", "M_{m,m,n}: two non-isometric metrics", 1e-4, false, false,
                 {
                     {1, 1, 2, 2, 2, {r5(1.61237, 1, 1, 1.11629, 1.61237), r5(0.387628, 1, 1, 1.48371, 0.387628)}},
                     {1, 1, 3, 2, 2, {r5(1.7303, 1, 1, 1.26935, 1.7303), r5(0.269703, 1, 1, 1.64493, 0.269703)}},
                     {1, 1, 4, 2, 2, {r5(1.79057, 1, 1, 1.37987, 1.79057), r5(0.209431, 1, 1, 1.73124, 0.209431)}},
                 }});

    t.push_back({"table3prime", "M_{m,m,n}: one metric up to isometry", 1e-3, false, false,
                 {
                     {2, 2, 1, 2, 1,
                      {r5(1.586, 2.089, 1, 1.473, 2.307), r5(0.7589, 0.4785, 1, 0.7052, 1.1037),
                       r5(1, 1.31775, 0.630577, 0.929305, 1.45443, true)}},
                     {3, 3, 2, 2, 1,
                      {r5(1.244, 2.001, 1, 1.847, 1.975), r5(0.6219, 0.4997, 1, 0.923, 0.9871),
                       r5(1, 1.60802, 0.803557, 1.4839, 1.58721, true)}},
                 }});

    t.push_back({"table4", "M_{m,m,n}: three non-isometric metrics", 1e-3, false, false,
                 {
                     {2, 2, 3, 4, 3,
                      {r5(0.70564, 1, 1, 1.6260, 1.0316), r5(1.7749, 1, 1, 1.3074, 2.1434),
                       r5(0.5547, 0.7405, 1, 1.3726, 0.8039), r5(0.7491, 1.3504, 1, 1.8535, 1.0856),
                       r5(1, 1.3349, 1.8027, 2.4743, 1.4492, true), r5(1, 1.8027, 1.3349, 2.4743, 1.4492, true)}},
                     {3, 3, 4, 4, 3,
                      {r5(0.8206, 1, 1, 1.6631, 1.2882), r5(1.8673, 1, 1, 1.34463, 2.3504),
                       r5(0.5086, 0.6038, 1, 1.2232, 0.7877), r5(0.8423, 1.6561, 1, 2.0256, 1.3046),
                       r5(1, 1.1872, 1.9661, 2.4047, 1.5488, true), r5(1, 1.9661, 1.1872, 2.4047, 1.5488, true)}},
                     {4, 4, 3, 4, 3,
                      {r5(1.1969, 1, 1, 1.4815, 1.898), r5(1.8027, 1, 1, 1.2629, 2.544),
                       r5(0.57292, 0.49478, 1, 0.97531, 0.9344), r5(1.1579, 2.0211, 1, 1.9712, 1.8884),
                       r5(1, 0.8636, 1.74545, 1.7024, 1.6309, true), r5(1, 1.7455, 0.8636, 1.7024, 1.6309, true)}},
                 }});

    // The (2, 100000, 99999) rows are listed at the source with x1 and x2 interchanged; kept here in x3 = 1 order.
    t.push_back({"intro", "large blocks (extended precision)", 1e-8, true, true,
                 {
                     {100000, 2, 3, 2, 2, {r2(0.49999812508758, 0.5000039582837693), r2(23333.9023351598, 23333.902296584482)}},
                     {100000, 99, 3, 2, 2, {r2(0.50024111495038, 0.4997597438771520), r2(984.203593167392, 984.36732072352000)}},
                     {2, 100000, 99999, 2, 2, {r2(1.5000033749343452, 0.50000562505320), r2(0.5000106250719541, 1.50000837497409)}},
                     {100000, 99999, 99998, 4, 4,
                      {r2(0.5000012500593759991, 0.49999875004062503385), r2(1.0000100001500034167, 2.00000999994999841665),
                       r2(1.0000100001500055835, 1.00000500007500279172), r2(2.0000049998749947081, 1.00000500007500170836)}},
                 }});
    return t;
}

} // namespace

const std::vector<RefTable>& reference_tables()
{
    static const std::vector<RefTable> tables = build();
    return tables;
}

const RefTable* find_table(const std::string& target)
{
    for (const auto& t : reference_tables())
        if (t.target == target)
            return &t;
    return nullptr;
}

} // namespace einstein
