"""Dictionary look-up answered by searching a single text.

Run: python3 demos/04_reduction.py
"""

from hardstrings import (
    Instance,
    Mode,
    bichromatic_closest_pair,
    build_text,
    dict_lookup_brute,
    dict_lookup_via_text,
    transform_instance,
    transform_set,
    verify_edit_offsets,
    verify_offset_exclusion,
    wrap_query,
)

inst = Instance(["0110", "1100", "0001"], k=1)
art = build_text(inst)
q = "0100"
print(f"gap G = {art.gap.to_text()}")
print(f"text  = {art.text.to_text()}")
print(f"query pattern G q G = {wrap_query(q, art.gap).to_text()}")
print(f"via text: {[(a.dict_index, a.distance) for a in dict_lookup_via_text(art, q, 1)]}")
print(f"brute   : {[(a.dict_index, a.distance) for a in dict_lookup_brute(inst, q, 1)]}")
print(f"no misaligned window within k: {verify_offset_exclusion(art, q, 1)}")

edit_inst = Instance(inst.strings, k=1, mode=Mode.EDIT)
edit_art = build_text(edit_inst)
print(f"\nedit mode text = {edit_art.text.to_text()}")
print(f"via text: {[(a.dict_index, a.distance) for a in dict_lookup_via_text(edit_art, q, 1)]}")
print(f"every close substring certified by a dictionary string: {verify_edit_offsets(edit_art, q, 1)}")

# Hamming instances become edit instances with the same distances.
moved = transform_instance(Instance(["0110", "1100"], k=2))
print(f"\ntransformed dictionary: mode={moved.mode.value}, length {moved.d}")
red, blue = ["0110", "1111"], ["0000", "1001"]
print(f"closest pair hamming: {bichromatic_closest_pair(red, blue)}")
print(f"closest pair edit after transform: "
      f"{bichromatic_closest_pair(transform_set(red), transform_set(blue), Mode.EDIT)}")
