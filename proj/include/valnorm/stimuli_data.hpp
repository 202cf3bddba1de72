#pragma once

// Bundled seven-language stimulus packs in the documented JSON pack layout.
// Lists are verbatim transcriptions (including repeated entries); the
// loader collapses duplicates and records the counts.

#include <array>
#include <string_view>

namespace valnorm::detail {

inline constexpr std::string_view kPack_zh = R"json(
{
 "language": "zh",
 "categories": {
  "flowers": [
   "三叶草",
   "兰花",
   "玫瑰",
   "水仙花",
   "紫丁香",
   "郁金香",
   "雏菊",
   "百合",
   "紫色",
   "木兰"
  ],
  "insects": [
   "蚂蚁",
   "跳蚤",
   "蜘蛛",
   "臭虫",
   "飞",
   "狼蛛",
   "蜜蜂",
   "蟑螂",
   "蚊子",
   "大黄蜂"
  ],
  "instruments": [
   "风笛",
   "大提琴",
   "吉他",
   "琵琶",
   "长号",
   "班卓琴",
   "单簧管",
   "口琴",
   "曼陀林",
   "喇叭",
   "巴松管",
   "鼓",
   "竖琴",
   "双簧管",
   "大号",
   "钟",
   "小提琴",
   "大键琴",
   "钢琴",
   "中提琴",
   "邦戈",
   "长笛",
   "喇叭",
   "萨克斯风",
   "小提琴"
  ],
  "weapons": [
   "箭头",
   "俱乐部",
   "枪",
   "导弹",
   "矛",
   "斧头",
   "匕首",
   "鱼叉",
   "手枪",
   "剑",
   "刀",
   "炸药",
   "斧头",
   "步枪",
   "罐",
   "炸弹",
   "火器",
   "刀子",
   "滑膛枪",
   "催泪瓦斯",
   "大炮",
   "手榴弹",
   "锤",
   "弹弓",
   "鞭子"
  ],
  "pleasant": [
   "抚摸",
   "自由",
   "健康",
   "爱",
   "和平",
   "欢呼",
   "朋友",
   "天堂",
   "忠诚",
   "乐趣",
   "钻石",
   "温和",
   "诚实",
   "幸运",
   "彩虹",
   "文凭"
  ],
  "unpleasant": [
   "滥用",
   "崩溃",
   "污秽",
   "谋杀",
   "疾病",
   "事故",
   "死亡",
   "悲痛",
   "毒",
   "臭",
   "突击",
   "灾害",
   "仇恨",
   "污染",
   "悲剧",
   "离婚",
   "监狱",
   "贫穷",
   "丑陋",
   "癌症",
   "杀",
   "烂",
   "呕吐",
   "痛苦",
   "监狱"
  ]
 }
}
)json";

inline constexpr std::string_view kPack_en = R"json(
{
 "language": "en",
 "categories": {
  "flowers": [
   "clover",
   "orchid",
   "rose",
   "daffodil",
   "lilac",
   "tulip",
   "daisy",
   "lily",
   "violet",
   "magnolia"
  ],
  "insects": [
   "ant",
   "flea",
   "spider",
   "bedbug",
   "fly",
   "tarantula",
   "bee",
   "cockroach",
   "mosquito",
   "hornet"
  ],
  "instruments": [
   "bagpipe",
   "cello",
   "guitar",
   "lute",
   "trombone",
   "banjo",
   "clarinet",
   "harmonica",
   "mandolin",
   "trumpet",
   "bassoon",
   "drum",
   "harp",
   "oboe",
   "tuba",
   "bell",
   "fiddle",
   "harpsichord",
   "piano",
   "viola",
   "bongo",
   "flute",
   "horn",
   "saxophone",
   "violin"
  ],
  "weapons": [
   "arrow",
   "club",
   "gun",
   "missile",
   "spear",
   "axe",
   "dagger",
   "harpoon",
   "pistol",
   "sword",
   "blade",
   "dynamite",
   "hatchet",
   "rifle",
   "tank",
   "bomb",
   "firearm",
   "knife",
   "shotgun",
   "teargas",
   "cannon",
   "grenade",
   "mace",
   "slingshot",
   "whip"
  ],
  "pleasant": [
   "caress",
   "freedom",
   "health",
   "love",
   "peace",
   "cheer",
   "friend",
   "heaven",
   "loyal",
   "pleasure",
   "diamond",
   "gentle",
   "honest",
   "lucky",
   "rainbow",
   "diploma",
   "gift",
   "honor",
   "miracle",
   "sunrise",
   "family",
   "happy",
   "laughter",
   "paradise",
   "vacation"
  ],
  "unpleasant": [
   "abuse",
   "crash",
   "filth",
   "murder",
   "sickness",
   "accident",
   "death",
   "grief",
   "poison",
   "stink",
   "assault",
   "disaster",
   "hatred",
   "pollute",
   "tragedy",
   "divorce",
   "jail",
   "poverty",
   "ugly",
   "cancer",
   "kill",
   "rotten",
   "vomit",
   "agony",
   "prison"
  ]
 }
}
)json";

inline constexpr std::string_view kPack_de = R"json(
{
 "language": "de",
 "categories": {
  "flowers": [
   "Klee",
   "Orchidee",
   "Rose",
   "Narzisse",
   "Flieder",
   "Tulpe",
   "Gänseblümchen",
   "Lilie",
   "Veilchen",
   "Magnolie"
  ],
  "insects": [
   "Ameise",
   "Floh",
   "Spinne",
   "Wanze",
   "Fliege",
   "Tarantel",
   "Biene",
   "Kakerlake",
   "Mücke",
   "Hornisse"
  ],
  "instruments": [
   "Dudelsack",
   "Cello",
   "Gitarre",
   "Laute",
   "Posaune",
   "Banjo",
   "Klarinette",
   "Mundharmonika",
   "Mandoline",
   "Trompete",
   "Fagott",
   "Trommel",
   "Harfe",
   "Oboe",
   "Tuba",
   "Glocke",
   "Geige",
   "Cembalo",
   "Klavier",
   "Bratsche",
   "Bongo",
   "Flöte",
   "Horn",
   "Saxophon",
   "Violine"
  ],
  "weapons": [
   "Pfeil",
   "Keule",
   "Waffe",
   "Rakete",
   "Speer",
   "Axt",
   "Dolch",
   "Harpune",
   "Pistole",
   "Schwert",
   "Klinge",
   "Dynamit",
   "Beil",
   "Gewehr",
   "Panzer",
   "Bombe",
   "Schusswaffe",
   "Messer",
   "Schrotflinte",
   "Tränengas",
   "Kanone",
   "Granate",
   "Streitkolben",
   "Schleuder",
   "Peitsche"
  ],
  "pleasant": [
   "Liebkosung",
   "Freiheit",
   "Gesundheit",
   "Liebe",
   "Frieden",
   "Jubel",
   "Freund",
   "Himmel",
   "Treue",
   "Vergnügen",
   "Diamant",
   "sanft",
   "ehrlich",
   "glücklich",
   "Regenbogen",
   "Diplom",
   "Geschenk",
   "Ehre",
   "Wunder",
   "Sonnenaufgang",
   "Familie",
   "glücklich",
   "Lachen",
   "Paradies",
   "Urlaub"
  ],
  "unpleasant": [
   "Missbrauch",
   "Absturz",
   "Schmutz",
   "Mord",
   "Krankheit",
   "Unfall",
   "Tod",
   "Trauer",
   "Gift",
   "Gestank",
   "Angriff",
   "Katastrophe",
   "Hass",
   "Umweltverschmutzung",
   "Tragödie",
   "Scheidung",
   "Gefängnis",
   "Armut",
   "hässlich",
   "Krebs",
   "töten",
   "faul",
   "Erbrechen",
   "Qual",
   "das Gefängnis"
  ]
 }
}
)json";

inline constexpr std::string_view kPack_pl = R"json(
{
 "language": "pl",
 "categories": {
  "flowers": [
   "koniczyna",
   "orchidea",
   "róża",
   "narcyz",
   "liliowy",
   "tulipan",
   "stokrotka",
   "lilia",
   "fiołek",
   "magnolia"
  ],
  "insects": [
   "mrówka",
   "pchła",
   "pająk",
   "pluskwa",
   "latać",
   "tarantula",
   "pszczoła",
   "karaluch",
   "komar",
   "szerszeń"
  ],
  "instruments": [
   "dudy",
   "wiolonczela",
   "gitara",
   "flet",
   "lutnia",
   "puzon",
   "banjo",
   "klarnet",
   "harmonijka",
   "mandolina",
   "trąbka",
   "fagot",
   "bęben",
   "harfa",
   "obój",
   "tuba",
   "dzwon",
   "skrzypce",
   "klawesyn",
   "fortepian",
   "altówka",
   "bongo",
   "róg",
   "saksofon",
   "skrzypce"
  ],
  "weapons": [
   "strzałka",
   "buława",
   "strzelba",
   "pocisk",
   "włócznia",
   "topór",
   "sztylet",
   "harpun",
   "pistolet",
   "miecz",
   "nóż",
   "dynamit",
   "toporek",
   "karabin",
   "czołg",
   "bomba",
   "broń palna",
   "ostrze",
   "flinta",
   "gaz łzawiący",
   "armata",
   "granat",
   "buzdygan",
   "proca",
   "bat"
  ],
  "pleasant": [
   "pieszczota",
   "swoboda",
   "zdrowie",
   "miłość",
   "dyplom",
   "pokój",
   "przyjemność",
   "dopingować",
   "przyjaciel",
   "niebiosa",
   "wierny",
   "diament",
   "delikatny",
   "uczciwy",
   "fartowny",
   "tęcza",
   "podarunek",
   "honor",
   "cud",
   "rodzina",
   "szczęśliwy",
   "śmiech",
   "raj",
   "wakacje",
   "świt"
  ],
  "unpleasant": [
   "nadużycie",
   "wypadek",
   "brud",
   "zabójstwo",
   "choroba",
   "awaria",
   "śmierć",
   "smutek",
   "trucizna",
   "smród",
   "atak",
   "katastrofa",
   "nienawiść",
   "zanieczyszczać",
   "tragedia",
   "rozwód",
   "więzienie",
   "bieda",
   "brzydki",
   "rak",
   "zgniły",
   "wymiociny",
   "agonia",
   "areszt",
   "zło"
  ]
 }
}
)json";

inline constexpr std::string_view kPack_pt = R"json(
{
 "language": "pt",
 "categories": {
  "flowers": [
   "trevo",
   "orquídea",
   "rosas",
   "narciso",
   "lilás",
   "tulipa",
   "margarida",
   "lírio",
   "tolet",
   "magnólia"
  ],
  "insects": [
   "formiga",
   "pulga",
   "aranha",
   "percevejo",
   "mosca",
   "tarântula",
   "abelha",
   "barata",
   "mosquito",
   "vespa"
  ],
  "instruments": [
   "gaita de foles",
   "violoncelo",
   "violão",
   "alaúde",
   "trombone",
   "banjo",
   "clarinete",
   "harmônica",
   "bandolim",
   "superada",
   "fagote",
   "tambor",
   "harpa",
   "oboé",
   "tuba",
   "sino",
   "rabeca",
   "cravo",
   "piano",
   "viola",
   "bongo",
   "flauta",
   "chifre",
   "saxofone",
   "violino"
  ],
  "weapons": [
   "flecha",
   "porrete",
   "arma de fogo",
   "míssil",
   "lança",
   "machado",
   "punhal",
   "arpão",
   "pistola",
   "espada",
   "lâmina",
   "dinamite",
   "machadinha",
   "rifle",
   "tanque",
   "bomba",
   "arma de fogo",
   "faca",
   "espingarda",
   "gás lacrimogêneo",
   "canhão",
   "granada",
   "maça",
   "estilingue",
   "chicote"
  ],
  "pleasant": [
   "carícia",
   "liberdade",
   "saúde",
   "amor",
   "diploma",
   "paz",
   "prazer",
   "alegrar",
   "amigo",
   "céu",
   "leal",
   "diamante",
   "gentil",
   "honesto",
   "sortudo",
   "arco-íris",
   "prenda",
   "honra",
   "milagre",
   "amanhecer",
   "família",
   "feliz",
   "riso",
   "paraíso",
   "férias"
  ],
  "unpleasant": [
   "maus-tratos",
   "colisão",
   "imundíce",
   "assassinato",
   "enfermidade",
   "acidente",
   "morte",
   "tristeza",
   "veneno",
   "fedor",
   "assalto",
   "desastre",
   "ódio",
   "tragédia",
   "poluir",
   "divórcio",
   "cadeia",
   "pobreza",
   "feio",
   "cancro",
   "matar",
   "divórcio",
   "cadeia",
   "pobreza",
   "feio",
   "cancro",
   "matar",
   "podre",
   "vómito",
   "agonia",
   "prisão"
  ]
 }
}
)json";

inline constexpr std::string_view kPack_es = R"json(
{
 "language": "es",
 "categories": {
  "flowers": [
   "trébol",
   "orquídea",
   "rosa",
   "narciso",
   "lila",
   "tulipán",
   "margarita",
   "lirio",
   "violeta",
   "magnolia"
  ],
  "insects": [
   "hormiga",
   "pulga",
   "araña",
   "ácaro",
   "mosca",
   "tarántula",
   "abeja",
   "cucaracha",
   "mosquito",
   "avispón"
  ],
  "instruments": [
   "cornamusa",
   "violonchelo",
   "guitarra",
   "flauta",
   "trombón",
   "banjo",
   "clarinete",
   "harmónica",
   "mandolina",
   "trompeta",
   "fagot",
   "tambor",
   "arpa",
   "oboe",
   "tuba",
   "campana",
   "fiddle",
   "clave",
   "piano",
   "viola",
   "bongo",
   "flute",
   "cuerno",
   "saxofón",
   "violín"
  ],
  "weapons": [
   "flecha",
   "palo",
   "pistola",
   "misil",
   "lanza",
   "hacha",
   "daga",
   "arpón",
   "espada",
   "cuchilla",
   "dinamitar",
   "rifle",
   "tanque",
   "bomba",
   "naja",
   "escopeta",
   "cañón",
   "granada",
   "mazo",
   "honda",
   "látigo"
  ],
  "pleasant": [
   "caricia",
   "libertad",
   "salud",
   "amor",
   "diploma",
   "paz",
   "placer",
   "ánimo",
   "amigo",
   "cielo",
   "leal",
   "diamante",
   "delicado",
   "honesto",
   "afortunado",
   "arco-iris",
   "obsequio",
   "honor",
   "milagro",
   "amanecer",
   "familia",
   "feliz"
  ],
  "unpleasant": [
   "maltrato",
   "choque",
   "inmundicia",
   "asesinato",
   "enfermedad",
   "accidente",
   "muerte",
   "pena",
   "ponzoña",
   "hedor",
   "asalto",
   "desastre",
   "odio",
   "contaminar",
   "tragedia",
   "divorcio",
   "cárcel",
   "pobreza",
   "feo",
   "cáncer",
   "matar",
   "podrido",
   "vómito",
   "agonía",
   "prisión"
  ]
 }
}
)json";

inline constexpr std::string_view kPack_tr = R"json(
{
 "language": "tr",
 "categories": {
  "flowers": [
   "yonca",
   "orkide",
   "gül",
   "nergis",
   "leylak",
   "lale",
   "papatya",
   "zambak",
   "menekşe",
   "manolya"
  ],
  "insects": [
   "karınca",
   "pire",
   "örümcek",
   "tahtakurusu",
   "sinek",
   "tarantula",
   "arı",
   "hamamböceği",
   "sivrisinek",
   "eşekarısı"
  ],
  "instruments": [
   "gayda",
   "çello",
   "gitar",
   "ut",
   "trombon",
   "banço",
   "klarnet",
   "mızıka",
   "mandolin",
   "trompet",
   "fagot",
   "davul",
   "arp",
   "obua",
   "tuba",
   "zil",
   "keman",
   "harpsikord",
   "piyano",
   "viyola",
   "tamtam",
   "flüt",
   "boynuz",
   "saksafon",
   "viyolin"
  ],
  "weapons": [
   "ok",
   "cop",
   "tabanca",
   "mermi",
   "mızrak",
   "balta",
   "hançer",
   "zıpkın",
   "silah",
   "kılıç",
   "bıçak",
   "dinamit",
   "nacak",
   "tüfek",
   "tank",
   "bomba",
   "silâh",
   "bıçak",
   "çifte",
   "gözyaşı gazı",
   "gülle",
   "bombası",
   "topuz",
   "mancınık",
   "kırbaç"
  ],
  "pleasant": [
   "okşamak",
   "özgürlük",
   "sağlık",
   "sevgi",
   "barış",
   "neşe",
   "arkadaş",
   "cennet",
   "sadık",
   "keyif",
   "pırlanta",
   "kibar",
   "dürüst",
   "şanslı",
   "gökkuşağı",
   "diploma",
   "hediye",
   "onur",
   "mucize",
   "gündoğumu",
   "aile",
   "mutlu",
   "kahkaha",
   "cennet",
   "tatil"
  ],
  "unpleasant": [
   "istismar",
   "çarpmak",
   "pislik",
   "cinayet",
   "hastalık",
   "ölüm",
   "üzüntü",
   "zehir",
   "kokuşmuş",
   "saldırı",
   "felaket",
   "nefret",
   "kirletmek",
   "facia",
   "boşanmak",
   "hapishane",
   "fakirlik",
   "çirkin",
   "kanser",
   "öldürmek",
   "çürümüş",
   "kusmuk",
   "ızdırap",
   "sancı",
   "cezaevi"
  ]
 }
}
)json";

struct BundledPack {
  std::string_view language;
  std::string_view json;
};

inline constexpr std::array<BundledPack, 7> kBundledPacks = {{
    BundledPack{"zh", kPack_zh},
    BundledPack{"en", kPack_en},
    BundledPack{"de", kPack_de},
    BundledPack{"pl", kPack_pl},
    BundledPack{"pt", kPack_pt},
    BundledPack{"es", kPack_es},
    BundledPack{"tr", kPack_tr},
}};

}  // namespace valnorm::detail
