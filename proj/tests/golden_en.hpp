#pragma once

// Golden transcription of the bundled English stimulus lists, frozen
// independently of the embedded pack data.

#include <string>
#include <vector>

namespace golden {

inline const std::vector<std::string> kEnFlowers{
    "clover", "orchid", "rose", "daffodil", "lilac",
    "tulip", "daisy", "lily", "violet", "magnolia"};

inline const std::vector<std::string> kEnInsects{
    "ant", "flea", "spider", "bedbug", "fly",
    "tarantula", "bee", "cockroach", "mosquito", "hornet"};

inline const std::vector<std::string> kEnInstruments{
    "bagpipe", "cello", "guitar", "lute", "trombone", "banjo", "clarinet",
    "harmonica", "mandolin", "trumpet", "bassoon", "drum", "harp", "oboe",
    "tuba", "bell", "fiddle", "harpsichord", "piano", "viola", "bongo",
    "flute", "horn", "saxophone", "violin"};

inline const std::vector<std::string> kEnWeapons{
    "arrow", "club", "gun", "missile", "spear", "axe", "dagger", "harpoon",
    "pistol", "sword", "blade", "dynamite", "hatchet", "rifle", "tank",
    "bomb", "firearm", "knife", "shotgun", "teargas", "cannon", "grenade",
    "mace", "slingshot", "whip"};

inline const std::vector<std::string> kEnPleasant{
    "caress", "freedom", "health", "love", "peace", "cheer", "friend",
    "heaven", "loyal", "pleasure", "diamond", "gentle", "honest", "lucky",
    "rainbow", "diploma", "gift", "honor", "miracle", "sunrise", "family",
    "happy", "laughter", "paradise", "vacation"};

inline const std::vector<std::string> kEnUnpleasant{
    "abuse", "crash", "filth", "murder", "sickness", "accident", "death",
    "grief", "poison", "stink", "assault", "disaster", "hatred", "pollute",
    "tragedy", "divorce", "jail", "poverty", "ugly", "cancer", "kill",
    "rotten", "vomit", "agony", "prison"};

}  // namespace golden
