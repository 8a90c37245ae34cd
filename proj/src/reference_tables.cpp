#include "trident/reference_tables.hpp"

#include "trident/sequence_engine.hpp"
#include "trident/specializations.hpp"

namespace trident {

const std::vector<ReferenceEntry>& reference_entries() {
  static const std::vector<ReferenceEntry> rows = {
      {"S", 0, "1"},
      {"S", 1, "w+x+y"},
      {"S", 2, "wx+wy+xy+z"},
      {"S", 3, "wxy+wz+xz+w+x+y"},
      {"S", 4, "w^2+2wx+2wy+wxz+x^2+2xy+y^2"},
      {"S", 5, "w^2x+w^2y+wx^2+3wxy+wy^2+wz+x^2y+xy^2+xz+yz"},
      {"S", 6, "w^2xy+w^2z+wx^2y+wx+wxy^2+2wxz+wy+wyz+x^2z+xyz+xy+z"},

      {"Q1", 0, "0"},
      {"Q1", 1, "1"},
      {"Q1", 2, "2z+4"},
      {"Q1", 3, "3z^2+12z+13"},
      {"Q1", 4, "4z^3+24z^2+52z+40"},
      {"Q1", 5, "5z^4+40z^3+130z^2+200z+121"},
      {"R1", 0, "1"},
      {"R1", 1, "z+2"},
      {"R1", 2, "z^2+4z+5"},
      {"R1", 3, "z^3+6z^2+15z+14"},
      {"R1", 4, "z^4+8z^3+30z^2+56z+41"},
      {"R1", 5, "z^5+10z^4+50z^3+140z^2+205z+122"},

      {"Q2", 1, "1"},
      {"Q2", 2, "3z^3+3z"},
      {"Q2", 3, "9z^6+10z^4+9z^2"},
      {"Q2", 4, "27z^9+33z^7+33z^5+27z^3"},
      {"Q2", 5, "81z^12+108z^10+118z^8+108z^6+81z^4"},
      {"Q2", 6, "243z^15+351z^13+414z^11+414z^9+351z^7+243z^5"},
      {"Q2", 7, "729z^18+1134z^16+1431z^14+1540z^12+1431z^10+1134z^8+729z^6"},

      {"Q3", 1, "1"},
      {"Q3", 2, "4z+2"},
      {"Q3", 3, "13z^2+11z+4"},
      {"Q3", 4, "40z^3+44z^2+28z+8"},
      {"Q3", 5, "121z^4+158z^3+133z^2+68z+16"},
      {"Q3", 6, "364z^5+542z^4+544z^3+374z^2+160z+32"},
      {"Q3", 7, "1093z^6+1817z^5+2071z^4+1715z^3+1000z^2+368z+64"},
  };
  return rows;
}

std::vector<TableRow> check_reference_tables() {
  std::vector<TableRow> out;
  for (const auto& e : reference_entries()) {
    TableRow row{std::string(e.table), e.n, std::string(e.text), {}, false};
    if (e.table == "S") {
      const MultiPoly got = s_poly(e.n);
      row.computed = got.to_string();
      row.matches = got == MultiPoly::parse(e.text);
    } else {
      const SpecId spec = e.table[1] == '1' ? SpecId::Z1 : e.table[1] == '2' ? SpecId::Z2 : SpecId::Z3;
      const Family fam = e.table[0] == 'Q' ? Family::Q : Family::R;
      const UniPoly got = spec_family(spec, fam, e.n);
      row.computed = got.to_string();
      const UniPoly want = e.text == "0" ? UniPoly{} : UniPoly::parse(e.text);
      row.matches = got == want;
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace trident
