// module.cpp - Python bindings for the residue number system library.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "rns/rns.hpp"

namespace py = pybind11;

using rns::CrtTable;
using rns::MixedRadixDigits;
using rns::ModulusSet;
using rns::NatBig;
using rns::ResidueInt;
using rns::SignedBig;

namespace {

using SetHandle = std::shared_ptr<ModulusSet>;

SetHandle unconst(rns::ModulusSetPtr p) {
    return std::const_pointer_cast<ModulusSet>(std::move(p));
}

py::object to_py_int(const NatBig& v) {
    return py::module_::import("builtins").attr("int")(v.to_decimal());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Carry-free big integers on pairwise-coprime residue systems";

    py::class_<NatBig>(m, "NatBig")
        .def(py::init<>())
        .def(py::init(&NatBig::from_u64), py::arg("value"))
        .def(py::init(&NatBig::from_decimal), py::arg("decimal"))
        .def_static("from_decimal", &NatBig::from_decimal, py::arg("decimal"))
        .def("to_decimal", &NatBig::to_decimal)
        .def("is_zero", &NatBig::is_zero)
        .def("limb_count", &NatBig::limb_count)
        .def("bit_length", &NatBig::bit_length)
        .def("divmod_small",
             [](const NatBig& a, std::uint32_t d) {
                 auto [q, r] = a.divmod_small(d);
                 return py::make_tuple(std::move(q), r);
             },
             py::arg("divisor"))
        .def("mod_small", &NatBig::mod_small, py::arg("modulus"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__int__", [](const NatBig& v) { return to_py_int(v); })
        .def("__float__", &NatBig::to_double)
        .def("__str__", &NatBig::to_decimal)
        .def("__repr__", [](const NatBig& v) {
            return "NatBig('" + v.to_decimal() + "')";
        });

    py::class_<ModulusSet, SetHandle>(m, "ModulusSet")
        .def_static(
            "create",
            [](const std::vector<std::uint32_t>& moduli) {
                return unconst(ModulusSet::create(moduli));
            },
            py::arg("moduli"))
        .def_static("defaults",
                    [] { return unconst(ModulusSet::defaults()); })
        .def("__len__", &ModulusSet::size)
        .def("modulus", &ModulusSet::modulus, py::arg("index"))
        .def_property_readonly("moduli", &ModulusSet::moduli)
        .def_property_readonly("product", &ModulusSet::product)
        .def("reciprocal", &ModulusSet::reciprocal, py::arg("j"),
             py::arg("k"))
        .def(py::self == py::self)
        .def("__repr__", [](const ModulusSet& s) {
            std::string out = "ModulusSet([";
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (j) out += ", ";
                out += std::to_string(s.modulus(j));
            }
            return out + "])";
        });

    py::class_<ResidueInt>(m, "ResidueInt")
        .def_static(
            "encode",
            [](std::uint64_t n, SetHandle set) {
                return ResidueInt::encode(n, std::move(set));
            },
            py::arg("value"), py::arg("set"))
        .def_static(
            "from_residues",
            [](std::vector<std::uint32_t> residues, SetHandle set) {
                return ResidueInt::from_residues(std::move(residues),
                                                 std::move(set));
            },
            py::arg("residues"), py::arg("set"))
        .def_static("parse", &ResidueInt::parse, py::arg("text"))
        .def_property_readonly("residues", &ResidueInt::residues)
        .def_property_readonly(
            "set", [](const ResidueInt& v) { return unconst(v.set()); })
        .def("str", &ResidueInt::str)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self + std::uint64_t())
        .def(std::uint64_t() + py::self)
        .def(py::self * std::uint64_t())
        .def(std::uint64_t() * py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__str__", &ResidueInt::str)
        .def("__repr__", [](const ResidueInt& v) {
            return "ResidueInt('" + v.str() + "')";
        });

    py::class_<MixedRadixDigits>(m, "MixedRadixDigits")
        .def(py::init([](SetHandle set, std::vector<std::uint32_t> digits) {
                 return MixedRadixDigits{std::move(set), std::move(digits)};
             }),
             py::arg("set"), py::arg("digits"))
        .def_property_readonly(
            "set",
            [](const MixedRadixDigits& d) { return unconst(d.set); })
        .def_property_readonly(
            "digits",
            [](const MixedRadixDigits& d) { return d.digits; })
        .def("__repr__", [](const MixedRadixDigits& d) {
            std::string out = "MixedRadixDigits([";
            for (std::size_t j = 0; j < d.digits.size(); ++j) {
                if (j) out += ", ";
                out += std::to_string(d.digits[j]);
            }
            return out + "])";
        });

    py::class_<SignedBig>(m, "SignedBig")
        .def_readonly("negative", &SignedBig::negative)
        .def_readonly("magnitude", &SignedBig::magnitude)
        .def("to_decimal", &SignedBig::to_decimal)
        .def("__int__",
             [](const SignedBig& v) {
                 return py::module_::import("builtins").attr("int")(
                     v.to_decimal());
             })
        .def("__str__", &SignedBig::to_decimal)
        .def("__repr__", [](const SignedBig& v) {
            return "SignedBig('" + v.to_decimal() + "')";
        });

    py::class_<CrtTable>(m, "CrtTable")
        .def_static("build", &CrtTable::build, py::arg("m1"), py::arg("m2"))
        .def_property_readonly("columns", &CrtTable::columns)
        .def_property_readonly("rows", &CrtTable::rows)
        .def("at", &CrtTable::at, py::arg("row"), py::arg("col"))
        .def("render", &CrtTable::render)
        .def("__str__", &CrtTable::render);

    m.def(
        "extended_gcd",
        [](std::uint64_t a, std::uint64_t b) {
            rns::Bezout bz = rns::extended_gcd(a, b);
            return py::make_tuple(bz.g, bz.x, bz.y);
        },
        py::arg("a"), py::arg("b"),
        "Return (g, x, y) with a*x + b*y = g = gcd(a, b)");
    m.def("mod_inverse", &rns::mod_inverse, py::arg("a"), py::arg("m"));
    m.def("to_mixed_radix", &rns::to_mixed_radix, py::arg("u"));
    m.def("from_mixed_radix", &rns::from_mixed_radix, py::arg("digits"));
    m.def("decode", &rns::decode, py::arg("u"));
    m.def("decode_signed", &rns::decode_signed, py::arg("u"));
    m.def("approx_float", &rns::approx_float, py::arg("u"));
    m.def(
        "encode_big",
        [](const NatBig& n, SetHandle set) {
            return rns::encode_big(n, std::move(set));
        },
        py::arg("value"), py::arg("set"));
}
