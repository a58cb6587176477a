# Copyright 2026 The Sitnet Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the bundled miniature fixtures under data/.

Run from the repository root: python3 tools/make_fixtures.py
Gold files are written separately by tools/make_gold.py because they are
restricted to the triples present in the generated networks.
"""

import json
import os
import random

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..")
DATA = os.path.join(ROOT, "data")

# key | lemmas | hypernym keys | gloss [| meronym keys]
# Polysemous lemmas take their sense ranks from definition order.
TAXONOMY = """
entity | entity | - | that which is perceived or known or inferred to have its own distinct existence
physical_entity | physical_entity | entity | an entity that has physical existence
abstraction | abstraction, abstract_entity | entity | a general concept formed by extracting common features from specific examples
matter | matter | physical_entity | that which has mass and occupies space
substance | substance | matter | the real physical matter of which a thing consists
object | object, physical_object | physical_entity | a tangible and visible entity that can cast a shadow
whole | whole, unit | object | an assemblage of parts that is regarded as a single entity
artifact | artifact, artefact | whole | a man-made object taken as a whole
location | location | physical_entity | a point or extent in space
region | region | location | a large indefinite location on the surface of the earth
living_thing | living_thing, animate_thing | whole | a living entity
organism | organism, being | living_thing | a living thing that has the ability to act or function independently
plant | plant, flora | organism | a living organism lacking the power of locomotion
shrub | shrub, bush | plant | a low woody perennial plant usually having several major stems
herb | herb, herbaceous_plant | plant | a plant lacking a permanent woody stem
animal | animal, beast | organism | a living organism characterized by voluntary movement
invertebrate | invertebrate | animal | any animal lacking a backbone
person | person, individual, someone | organism | a human being
worker | worker | person | a person who works at a specific occupation
cell | cell | living_thing | the basic structural and functional unit of all organisms
gamete | gamete | cell | a mature sexual reproductive cell
group | group, grouping | abstraction | any number of entities considered as a unit
biological_group | biological_group | group | a group of plants or animals
taxonomic_group | taxonomic_group, taxon | biological_group | animal or plant group having natural relations
genus | genus | taxonomic_group | a taxonomic category ranking below a family
mammal_genus | mammal_genus | genus | a genus of mammals
collection | collection, aggregation | group | several things grouped together
vegetation | vegetation, flora_growth | collection | all the plant life in a particular region
psychological_feature | psychological_feature | abstraction | a feature of the mental life of a living organism
cognition | cognition, knowledge | psychological_feature | the psychological result of perception and learning and reasoning
content | content, cognitive_content | cognition | the sum or range of what has been perceived or learned
belief | belief | content | any cognitive content held as true
spiritual_being | spiritual_being, supernatural_being | belief | an incorporeal being believed to have powers
deity | deity, divinity, god | spiritual_being | any supernatural being worshipped as controlling some part of the world
greek_deity | greek_deity | deity | a deity worshipped by the ancient Greeks
event | event | psychological_feature | something that happens at a given place and time
act | act, deed, human_action | event | something that people do or cause to happen
show | show | event | a social event involving a public performance or entertainment
broadcast | broadcast, program | show | a radio or television show
communication | communication | abstraction | something that is communicated by or to or between people or groups
publication | publication | communication | a copy of a printed work offered for distribution
newspaper | newspaper, paper | publication | a daily or weekly publication on folded sheets
measure | measure, quantity, amount | abstraction | how much there is or how many there are of something
definite_quantity | definite_quantity | measure | a specific measure of amount
unit_of_measurement | unit_of_measurement, unit_of_measure | definite_quantity | any division of quantity accepted as a standard
volume_unit | volume_unit, capacity_unit | unit_of_measurement | a unit of measure for volume or capacity
containerful | containerful | volume_unit | the quantity that a container will hold
attribute | attribute | abstraction | an abstraction belonging to or characteristic of an entity
property | property | attribute | a basic or essential attribute shared by all members of a class
chemical | chemical, chemical_substance | substance | material produced by or used in a reaction involving changes in atoms or molecules
compound | compound, chemical_compound | chemical | a substance formed by chemical union of two or more elements
carbohydrate | carbohydrate, saccharide | compound | an essential structural component of living cells and source of energy
element | element, chemical_element | substance | any of the more than 100 known substances that cannot be separated into simpler substances
metallic_element | metallic_element, metal | element | any of several chemical elements that are usually shiny solids
fuel | fuel | substance | a substance that can be consumed to produce energy
fossil_fuel | fossil_fuel | fuel | fuel consisting of the remains of organisms preserved in rocks
desiccant | desiccant, drying_agent | substance | a substance that promotes drying
food | food, solid_food | substance | any solid substance used as a source of nourishment
vegetable | vegetable, veggie | food | edible seeds or roots or stems or leaves or bulbs of plants
ingredient | ingredient, fixings | substance | food that is a component of a mixture in cooking
flavorer | flavorer, flavourer, seasoner, seasoning | ingredient | something added to food primarily for the savor it imparts
fat | fat, cooking_fat | ingredient | a soft greasy substance used in cooking
sweetening | sweetening, sweetener | ingredient | something added to foods to make them taste sweeter
cleansing_agent | cleansing_agent | substance | a preparation used in cleaning something
instrumentality | instrumentality, instrumentation | artifact | an artifact that is instrumental in accomplishing some end
container | container | instrumentality | any object that can be used to hold things
vessel | vessel | container | an object used as a container for liquids
metal_vessel | metal_vessel | vessel | a vessel made of metal
device | device | instrumentality | an instrumentality invented for a particular purpose
home_appliance | home_appliance, household_appliance | device | an appliance that does a particular job in the home
white_goods | white_goods | home_appliance | large electrical home appliances that are typically finished in white enamel
heater | heater, warmer | device | device that heats water or supplies warmth to a room
support | support | device | any device that bears the weight of another thing
hardware | hardware | instrumentality | major items of military weaponry or metal implements used in the home
fitting | fitting | hardware | small standardized parts used to join or seal other parts
seal | seal | fitting | a device incorporating a passage that closes on one side
flat_ring | flat_ring | seal | a thin flat ring used as a seal or spacer
instrument | instrument | device | a device that requires skill for proper use
weapon | weapon, arm | instrument | any instrument or instrumentality used in fighting or hunting
equipment | equipment | instrumentality | an instrumentality needed for an undertaking or to perform a service
sports_equipment | sports_equipment | equipment | equipment needed to participate in a particular sport
game_equipment | game_equipment | equipment | equipment or apparatus used in playing a game
ball | ball | game_equipment | round object that is hit or thrown or kicked in games
golf_equipment | golf_equipment | sports_equipment | sports equipment used in playing golf
implement | implement | instrumentality | instrumentation used to achieve some end
cleaning_implement | cleaning_implement, cleaning_device | implement | an implement used to clean things
kitchen_equipment | kitchen_equipment | instrumentality | equipment used for cooking and eating in a kitchen
kitchen_utensil | kitchen_utensil | kitchen_equipment | a utensil used in preparing food
cooking_utensil | cooking_utensil, cookware | kitchen_utensil | a kitchen utensil made of material that does not melt easily; used for cooking
cutlery | cutlery, eating_utensil | kitchen_utensil | implements used for eating and cutting food
kitchen_appliance | kitchen_appliance | kitchen_equipment | a home appliance used in preparing food
tableware | tableware | kitchen_equipment | articles for use at the table such as dishes and bowls
covering | covering | artifact | an artifact that covers something else
clothing | clothing, clothes, apparel | covering | a covering designed to be worn on a person's body
garment | garment | clothing | an article of clothing
hosiery | hosiery, hose | clothing | socks and stockings and tights collectively
handwear | handwear, hand_wear | clothing | clothing for the hands
wrapping | wrapping, wrap | covering | the covering in which something is wrapped
fabric | fabric, cloth, textile | artifact | artifact made by weaving or felting or knitting natural or synthetic fibers
piece_of_cloth | piece_of_cloth, piece_of_material | fabric | a separate part consisting of fabric
bedclothes | bedclothes, bed_clothing, bedding | piece_of_cloth | coverings that are used on a bed
towel.cloth | towel | piece_of_cloth | a rectangular piece of absorbent cloth for drying or wiping
layer | layer | region | a relatively thin sheetlike expanse or region lying over or under another
material | material, stuff | artifact | the tangible substance that goes into the makeup of a physical object
building_material | building_material | material | material used for constructing buildings
sheet | sheet, flat_solid | building_material | a flat artifact that is thin relative to its length and width
sheet_metal | sheet_metal | sheet | a flat piece of metal
body_covering | body_covering | whole | any covering for the body or a body part
hair | hair | body_covering | a covering for the body consisting of a dense growth of threadlike structures
structure | structure, construction | artifact | a thing constructed; a complex entity constructed of many parts
room | room | structure | an area within a building enclosed by walls and floor and ceiling
building | building, edifice | structure | a structure that has a roof and walls
establishment | establishment | structure | a public or private structure including buildings and equipment for business
furniture | furniture, piece_of_furniture | artifact | furnishings that make a room ready for occupancy
fixture | fixture | artifact | an object firmly fixed in place in a household
blade | blade | artifact | the flat part of a tool or weapon that has a cutting edge
handle | handle, grip | artifact | the appendage to an object that is designed to be held in order to use it
bristle | bristle | artifact | a stiff fiber used to make brushes

pan.cooking | pan, cooking_pan | cooking_utensil | cooking utensil consisting of wide metal vessel | handle
pan.god | Pan, goat_god | greek_deity | (Greek mythology) god of fields and woods and shepherds and flocks
pan.container | pan | metal_vessel | shallow container made of metal
pan.genus | Pan, genus_Pan | mammal_genus | chimpanzees; more closely related to Australopithecus than to other pongids
saucepan | saucepan | cooking_utensil | a deep pan with a handle; used for stewing or boiling | handle
frying_pan | frying_pan, frypan, skillet | cooking_utensil | a pan used for frying foods | handle
knife.cutlery | knife | cutlery | a utensil with a sharp blade used for cutting food | blade, handle
knife.weapon | knife | weapon | a weapon with a handle and blade with a sharp point | blade, handle
spoon | spoon | cutlery | a piece of cutlery with a shallow bowl and a handle used to stir or eat | handle
bowl.dish | bowl | tableware | a round vessel that is open at the top; used chiefly for holding food or liquids
bowl.ball | bowl, bowling_ball | ball | a wooden ball used in the game of bowls
plate.dish | plate | tableware | dish on which food is served or from which food is eaten
plate.sheet | plate | sheet_metal | a sheet of metal or wood or glass or plastic
cup.dish | cup | tableware | a small open container usually used for drinking | handle
cup.measure | cup, cupful | containerful | the quantity a cup will hold
stove.kitchen | stove, kitchen_stove, range, cooking_stove | kitchen_appliance | a kitchen appliance used for cooking food
stove.heater | stove, woodstove | heater | a heater in which solid fuel is burned to warm a room
oven | oven | kitchen_appliance | kitchen appliance used for baking or roasting
garlic | garlic | flavorer | aromatic bulb used as seasoning
onion.bulb | onion | vegetable | the bulb of an onion plant used as a vegetable
onion.plant | onion, onion_plant | herb | bulbous plant having hollow leaves cultivated worldwide for its rounded edible bulb
salt.compound | salt | compound | a compound formed by replacing hydrogen in an acid by a metal
salt.table | salt, table_salt, common_salt | flavorer | white crystalline form of sodium chloride used to season and preserve food
pepper.spice | pepper, black_pepper | flavorer | pungent seasoning from the berry of the common pepper plant
pepper.plant | pepper, capsicum | herb | any of various tropical plants of the genus Capsicum
oil.fuel | oil, petroleum, crude_oil | fossil_fuel | a dark oil consisting mainly of hydrocarbons
oil.cooking | cooking_oil, oil | fat | any of numerous vegetable oils used in cooking
butter | butter | fat | an edible emulsion of fat globules made by churning milk or cream
flour | flour | ingredient | fine powdery foodstuff obtained by grinding and sifting the meal of a cereal grain
egg.food | egg, eggs | ingredient | oval reproductive body of a fowl used as food
egg.cell | egg, ovum | gamete | the female reproductive cell
sugar.table | sugar, refined_sugar | sweetening | a white crystalline carbohydrate used as a sweetener and preservative
sugar.compound | sugar, saccharide | carbohydrate | an essential structural component of living cells

washer.person | washer | worker | someone who washes things for a living
washer.seal | washer | flat_ring | seal consisting of a flat disk placed to prevent leakage
washer.machine | washer, automatic_washer, washing_machine | white_goods | a home appliance for washing clothes and linens automatically
dryer.agent | drier, dryer | desiccant | a substance that promotes drying
dryer.machine | dryer, drier, clothes_dryer | white_goods | an appliance that removes moisture from laundry
sock | sock | hosiery | hosiery consisting of a cloth covering for the foot
shirt | shirt | garment | a garment worn on the upper half of the body
towel.cloth | towel | piece_of_cloth | a rectangular piece of absorbent cloth for drying or wiping
detergent | detergent | cleansing_agent | a surface-active chemical widely used in industry and laundry
basket.container | basket, handbasket | container | a container that is usually woven and has handles | handle
basket.hoop | basket, basketball_hoop, hoop | game_equipment | horizontal circular metal hoop supporting a net through which players try to throw the basketball
iron.metal | iron, Fe | metallic_element | a heavy ductile magnetic metallic element
iron.appliance | iron, smoothing_iron | home_appliance | home appliance consisting of a flat metal base that is heated and used to smooth cloth | handle
iron.club | iron | golf_equipment | a golf club that has a relatively narrow metal head
hanger.device | hanger | support | a support that hangs clothes
hanger.person | hanger | person | a person who hangs something
trousers | trousers, pants | garment | a garment extending from the waist to the knee or ankle
jacket.garment | jacket | garment | a short coat
jacket.wrapping | jacket, book_jacket, dust_cover | wrapping | the paper cover of a book
bleach | bleach, bleaching_agent | cleansing_agent | the act of whitening something by chemical means
blanket.bed | blanket, cover | bedclothes | bedding that keeps a person warm in bed
blanket.layer | blanket, mantle | layer | a layer of stuff that covers something completely
sweater.garment | sweater, jumper | garment | a crocheted or knitted garment covering the upper part of the body
sweater.person | sweater | person | a person who sweats
glove.handwear | glove | handwear | handwear covering the hand and fingers
glove.baseball | baseball_glove, glove, mitt | sports_equipment | the handwear used by fielders in playing baseball

rag.cloth | rag, shred, tag_end | piece_of_cloth | a small piece of cloth or paper
rag.newspaper | tabloid, rag, sheet | newspaper | a newspaper with half-size pages
soap.agent | soap | cleansing_agent | a cleansing agent made from the salts of vegetable or animal fats
soap.opera | soap_opera, soap | broadcast | a serial daytime television drama
paper_towel | paper_towel | towel.cloth | a disposable absorbent paper towel
broom.plant | broom | shrub | any of various shrubs having long slender branches and yellow flowers
broom.implement | broom | cleaning_implement | a cleaning implement for sweeping | handle, bristle
mop.implement | mop, swab | cleaning_implement | cleaning implement consisting of absorbent material fastened to a handle | handle
mop.hair | mop, mop_of_hair, shock | hair | a thick mass of hair
sponge.animal | sponge, poriferan | invertebrate | primitive multicellular marine animal whose porous body is supported by a fibrous skeletal framework
sponge.implement | sponge | cleaning_implement | a porous mass usable to absorb water for cleaning
bucket.vessel | bucket, pail | vessel | a roughly cylindrical vessel that is open at the top | handle
bucket.measure | bucket, bucketful | containerful | the quantity contained in a bucket
vacuum.space | vacuum, vacuity | region | the absence of matter
vacuum.cleaner | vacuum, vacuum_cleaner | home_appliance | an electrical home appliance that cleans by suction
brush.implement | brush | cleaning_implement | an implement that has hairs or bristles firmly set into a handle | handle, bristle
brush.vegetation | brush, brushwood, coppice | vegetation | a dense growth of bushes
dustpan | dustpan | container | a short-handled receptacle into which dust can be swept | handle
cleanser | cleanser, cleaner | cleansing_agent | a preparation used in cleaning something

kitchen | kitchen | room | a room equipped for preparing meals
cupboard | cupboard, closet_cupboard | furniture | a small room or recess or cabinet used for storage space
drawer | drawer | furniture | a boxlike container in a piece of furniture
refrigerator | refrigerator, icebox | kitchen_appliance | a white goods in which food can be stored at low temperatures
pantry | pantry, larder | room | a small storeroom for storing foods or wines
sink.basin | sink | fixture | plumbing fixture consisting of a water basin fixed to a wall or floor
sink.depression | sink, sinkhole | region | a depression in the ground communicating with a subterranean passage
table.furniture | table | furniture | a piece of furniture having a smooth flat top supported by legs
table.array | table, tabular_array | communication | a set of data arranged in rows and columns
store | store, shop | establishment | a mercantile establishment for the retail sale of goods
restaurant | restaurant, eating_house | building | a building where people go to eat
garage | garage | building | an outbuilding where a car is kept
dresser | dresser, chest_of_drawers | furniture | furniture with drawers for keeping clothes
bedroom | bedroom, sleeping_room | room | a room used primarily for sleeping
closet | closet, wardrobe | room | a small room for storing clothes or cleaning tools
laundry_room | laundry_room | room | a room equipped for washing clothes
bathroom | bathroom, bath | room | a room with a bathtub or shower and a sink
house | house | building | a dwelling that serves as living quarters for a family
forest | forest, woodland | region | land that is covered with trees and shrubs
foot | foot | body_covering | the extremity of the leg below the ankle
office | office | room | a place of business where professional or clerical duties are performed

hot | hot, hotness | property | the property of being at a high temperature
cold | cold, coldness | property | the property of being at a low temperature
sharp | sharp, sharpness | property | the quality of having a thin cutting edge or fine point
fragile | fragile, fragility | property | the quality of being easily broken or damaged
pungent | pungent, pungency | property | a strong odor or taste property
salty | salty, saltiness | property | the taste experience when common salt is taken into the mouth
spicy | spicy, spiciness | property | the property of being seasoned with spice
sweet | sweet, sweetness | property | the taste experience when sugar dissolves in the mouth
greasy | greasy, greasiness | property | the property of containing or covered with fat or oil
soft | soft, softness | property | the property of giving little resistance to pressure
white | white, whiteness | property | the quality or state of the achromatic color of greatest lightness
heavy | heavy, heaviness | property | the property of being comparatively great in weight
warm | warm, warmth | property | the quality of having a moderate degree of heat
absorbent | absorbent, absorbency | property | the property of being able to take in liquid
toxic | toxic, toxicity | property | the degree to which something is poisonous
soapy | soapy, soapiness | property | the quality of being like or containing soap
slippery | slippery, slipperiness | property | the property of being smooth and slick
loud | loud, loudness | property | the magnitude of sound
wet | wet, wetness | property | the condition of containing liquid
dirty | dirty, dirtiness | property | the state of being unsanitary or soiled
yellow | yellow, yellowness | property | the quality of the color of ripe lemons
edible | edible, edibility | property | the property of being fit to eat
dramatic | dramatic, drama | property | the quality of being arresting or highly emotional
smelly | smelly, smelliness | property | the property of having a strong unpleasant odor

cook | cook, cooking, cookery | act | the act of preparing food by heating it
fry | fry, frying | act | the act of cooking food in hot fat or oil
boil | boil, boiling | act | the act of cooking food in boiling water
heat | heat, heating | act | the act of making something warm or hot
bake | bake, baking | act | the act of cooking food in an oven with dry heat
cut | cut, cutting | act | the act of penetrating or opening with a sharp edge
stir | stir, stirring | act | the act of mixing food with a spoon
eat | eat, eating | act | the act of consuming food
serve | serve, serving | act | the act of presenting food to diners
drink | drink, drinking | act | the act of swallowing liquid
season | season, seasoning_act | act | the act of adding flavor to food
wash | wash, washing, laundering | act | the act of cleaning clothes or dishes with water and soap
dry | dry, drying | act | the act of removing moisture from laundry or dishes
press | press, pressing, ironing | act | the act of smoothing clothes with a heated iron
wear | wear, wearing | act | the act of having clothing on your body
whiten | whiten, whitening | act | the act of making clothes white with bleach
carry | carry, carrying | act | the act of moving something while holding it
hang | hang, hanging | act | the act of suspending clothes on a support
cover | cover, covering_act | act | the act of covering a bed or person
clean | clean, cleaning | act | the act of removing dirt from a house
sweep | sweep, sweeping | act | the act of cleaning a floor with a broom
scrub | scrub, scrubbing | act | the act of cleaning by rubbing hard with a brush
wipe | wipe, wiping | act | the act of rubbing a surface clean with a cloth
golf | golf, golf_game | act | a game played with clubs on a golf course
kill | kill, killing | act | the act of terminating a life
puppet | puppet, puppetry | act | the art of making or operating puppets
"""

# Lemmas whose sense order differs from definition order.
SENSE_ORDER = {
    "iron": ["iron.metal", "iron.appliance", "iron.club"],
    "washer": ["washer.person", "washer.seal", "washer.machine"],
    "sponge": ["sponge.animal", "sponge.implement"],
    "vacuum": ["vacuum.space", "vacuum.cleaner"],
    "salt": ["salt.compound", "salt.table"],
}

# Corpus counts for frequent words (IC below 5 against the total); every
# other lemma gets a small count. Counts for general terms push them under
# the information content threshold so compression removes them.
TOTAL_TOKENS = 1000000
FREQUENT = {
    "entity": 40000, "physical_entity": 15000, "abstraction": 12000, "matter": 30000,
    "substance": 25000, "object": 60000, "whole": 45000, "artifact": 9000,
    "instrumentality": 7000, "location": 20000, "region": 18000, "living_thing": 8000,
    "organism": 9000, "group": 50000, "psychological_feature": 7000, "event": 30000,
    "act": 35000, "attribute": 12000, "property": 15000, "measure": 20000,
    "structure": 20000, "equipment": 9000, "communication": 15000, "cognition": 7000,
}
RARE_COUNTS = {  # general enough to matter but kept as concepts (IC >= 5)
    "food": 6000, "ingredient": 900, "clothing": 3000, "home_appliance": 2500,
    "kitchen_equipment": 20, "tableware": 300, "cutlery": 400,
    "device": 5000, "covering": 5000, "container": 5000, "implement": 5000,
}

STOPWORDS = """a about above after again against all am an and any are as at be because been
before being below between both but by can could did do does doing down during each few for
from further had has have having he her here hers herself him himself his how i if in into is
it its itself just me more most my myself no nor not now of off on once only or other our ours
out over own same she should so some such than that the their theirs them then there these they
this those through to too under until up very was we were what when where which while who whom
why will with would you your usually often used use uses also one two many much""".split()

# title -> text. Related words co-occur so relatedness separates true pairs.
ESA_DOCS = [
    ("Kitchen", "a kitchen is a room for cooking. the kitchen has a stove an oven a sink a refrigerator a cupboard a drawer and a pantry. pans pots cutlery tableware and kitchen equipment are kept in the kitchen. food and ingredients are stored in the kitchen pantry and refrigerator"),
    ("Cookware", "cookware and cooking utensils include the pan the saucepan and the frying pan. a cooking pan is a wide metal vessel. pans get hot on the stove. a cooking utensil is used to cook food in the kitchen and is stored in a cupboard"),
    ("Frying pan", "a frying pan or skillet is a pan used to fry food in hot oil or fat or butter. frying on the stove needs a hot pan. fry eggs and onion in the frying pan"),
    ("Saucepan", "a saucepan is a deep cooking pan with a handle used to boil water and cook sauces on the stove. boil pasta in a saucepan. a saucepan gets hot"),
    ("Stove", "a stove or kitchen range is a kitchen appliance used to cook and heat food. the stove heat cooks food in pans. stoves get hot. the oven is part of the stove in the kitchen"),
    ("Oven", "an oven is a kitchen appliance used to bake and roast food. bake bread with flour eggs and sugar in a hot oven. oven heat cooks food in the kitchen"),
    ("Baking", "baking uses flour sugar eggs and butter. bake cakes and bread in the oven. flour is white powder. sugar is sweet"),
    ("Knife", "a knife is cutlery with a sharp blade and a handle used to cut food. keep knives in a drawer in the kitchen. a sharp knife cuts onion and garlic"),
    ("Cutlery", "cutlery includes the knife the fork and the spoon. cutlery is kept in a kitchen drawer. a spoon is used to stir and eat. knives are sharp"),
    ("Spoon", "a spoon is a utensil with a shallow bowl and a handle used to stir soup and eat food. stir with a spoon. spoons are cutlery in the drawer"),
    ("Tableware", "tableware includes the plate the bowl and the cup. tableware is fragile and is used to serve food at the table. dishes plates bowls and cups are kept in the cupboard of the kitchen"),
    ("Plate", "a plate is a fragile dish on which food is served and eaten at the table. serve dinner on a plate. plates are tableware kept in the cupboard"),
    ("Bowl", "a bowl is a round fragile dish used to serve and eat soup or cereal at the table. bowls are tableware kept in a kitchen cupboard"),
    ("Cup", "a cup is a small fragile container used to drink tea or coffee. drink from a cup at the table. cups are tableware in the cupboard"),
    ("Seasoning", "seasoning flavorer and spice season food. garlic salt and pepper are used to season food. salt is salty. pepper is spicy. garlic is pungent"),
    ("Garlic", "garlic is a pungent bulb used to season food. garlic and onion are kept in the pantry in the kitchen. garlic is an ingredient and flavorer"),
    ("Onion", "an onion is a pungent vegetable bulb eaten as food. onion and garlic are ingredients kept in the pantry. fry onion in oil"),
    ("Salt", "table salt is a salty white seasoning used to season food. salt is a flavorer kept in the kitchen pantry"),
    ("Pepper", "black pepper is a spicy pungent seasoning used to season food. pepper and salt are flavorers in the kitchen pantry"),
    ("Cooking oil", "cooking oil is a greasy fat used to fry food in a frying pan. oil and butter are cooking fats. oil is an ingredient in the pantry"),
    ("Butter", "butter is a soft greasy fat made from cream. butter is kept in the refrigerator. fry and bake with butter"),
    ("Egg", "an egg is a fragile ingredient used to bake and cook. eggs are kept in the refrigerator. fry an egg in a pan"),
    ("Refrigerator", "a refrigerator is a cold kitchen appliance used to store food. butter eggs and milk are kept in the refrigerator in the kitchen"),
    ("Pantry", "a pantry is a small room near the kitchen used to store food and ingredients such as flour sugar salt garlic onion and oil"),
    ("Grocery store", "a store or shop sells food and ingredients and clothing. people buy groceries at the store in town"),
    ("Laundry", "laundry is washing clothes. the washer or washing machine washes clothes with detergent and bleach. the dryer dries clothes. laundry baskets carry clothes to the laundry room of the house"),
    ("Washing machine", "a washing machine or automatic washer is a heavy white goods appliance used to wash clothes and linens with detergent in the laundry room"),
    ("Clothes dryer", "a clothes dryer is a heavy white goods appliance used to dry laundry and towels in the laundry room of the house"),
    ("Iron", "a smoothing iron is a hot home appliance used to press clothes and remove wrinkles from shirts and trousers. ironing is pressing"),
    ("Clothing", "clothing and garments are worn on the body. wear a shirt trousers a jacket a sweater socks and gloves. clothes are kept in the closet and the dresser of the bedroom. clothes are hung on hangers"),
    ("Sock", "a sock is soft hosiery worn on the foot. socks are kept in a dresser drawer in the bedroom. wear socks and wash them in the washer"),
    ("Sweater", "a sweater or jumper is a warm knitted garment worn in winter. sweaters and jackets and gloves keep you warm. keep sweaters in the dresser"),
    ("Jacket", "a jacket is a warm short coat worn outside. hang a jacket on a hanger in the closet"),
    ("Glove", "a glove is warm handwear worn on the hand in winter. gloves are kept in a dresser drawer"),
    ("Towel", "a towel is a soft absorbent piece of cloth used to dry the body after a bath. towels are kept in the bathroom. wash and dry towels"),
    ("Blanket", "a blanket is soft warm bedding used to cover a bed in the bedroom. blankets keep a person warm"),
    ("Hanger", "a clothes hanger is a support used to hang shirts and jackets in the closet"),
    ("Detergent and bleach", "detergent is a soapy cleansing agent used to wash laundry. bleach is a toxic agent used to whiten white clothes. keep detergent and bleach in the laundry room"),
    ("Basket", "a laundry basket is a woven container with handles used to carry clothes to the laundry room"),
    ("Cleaning", "cleaning a house uses a broom a mop a vacuum a brush a sponge a rag a bucket a dustpan soap and cleanser. clean floors and sweep dust. cleaning tools are kept in a closet"),
    ("Broom", "a broom is a cleaning implement with bristles and a handle used to sweep the floor. sweep dust into a dustpan with the broom. keep the broom in the closet"),
    ("Mop and bucket", "a mop is a wet cleaning implement used to clean and wash floors. carry water in a bucket. keep the mop and bucket in the closet"),
    ("Vacuum cleaner", "a vacuum cleaner is a loud electrical home appliance used to clean carpets by suction. keep the vacuum in the closet"),
    ("Sponge and rag", "a sponge is an absorbent cleaning implement used to scrub and wipe dishes at the kitchen sink. a rag is an absorbent dirty piece of cloth used to wipe. paper towels are absorbent and used to wipe spills in the kitchen"),
    ("Soap", "soap is a slippery soapy cleansing agent used to wash hands in the bathroom. cleanser is a cleaning agent used to scrub the bathroom"),
    ("Brush", "a scrub brush is a cleaning implement with bristles used to scrub floors and clean"),
    ("Greek mythology", "pan the goat god of fields woods shepherds and flocks is a greek deity of mythology. forest gods and nymphs"),
    ("Golf and sports", "golf is played with clubs such as an iron and a driver. baseball players wear a baseball glove or mitt. basketball players throw the ball through the basket hoop. bowling balls"),
    ("Physics", "a vacuum is a space empty of matter. iron is a heavy metallic element. salt compounds and sugars are chemicals. oil and petroleum are fossil fuels"),
    ("Television", "a soap opera is a dramatic serial television drama. a tabloid newspaper or rag prints gossip"),
]

# (relation, start, end, weight, start_sense, end_sense)
EDGES = [
    # recipe
    ("AtLocation", "kitchen_equipment", "kitchen", 4.0),
    ("AtLocation", "kitchen_appliance", "kitchen", 4.0),
    ("AtLocation", "cooking_utensil", "cupboard", 4.0),
    ("AtLocation", "tableware", "cupboard", 3.5),
    ("AtLocation", "cutlery", "drawer", 4.0),
    ("AtLocation", "ingredient", "pantry", 4.0),
    ("AtLocation", "ingredient", "kitchen", 3.5),
    ("AtLocation", "food", "kitchen", 4.0),
    ("AtLocation", "food", "store", 4.0),
    ("AtLocation", "ingredient", "store", 3.0),
    ("AtLocation", "butter", "refrigerator", 4.0),
    ("AtLocation", "egg", "refrigerator", 4.0),
    ("AtLocation", "tableware", "table", 3.0),
    ("AtLocation", "cupboard", "kitchen", 4.0),
    ("AtLocation", "drawer", "kitchen", 3.0),
    ("AtLocation", "pantry", "kitchen", 4.0),
    ("AtLocation", "refrigerator", "kitchen", 4.0),
    ("AtLocation", "sink", "kitchen", 4.0),
    ("AtLocation", "table", "kitchen", 2.5),
    ("AtLocation", "garlic", "sink", 0.5),
    ("AtLocation", "pan", "garage", 0.5),
    ("AtLocation", "store", "town", 4.0),
    ("AtLocation", "restaurant", "town", 4.0),
    ("HasProperty", "kitchen_appliance", "hot", 4.0),
    ("HasProperty", "cooking_utensil", "hot", 3.5),
    ("HasProperty", "knife", "sharp", 4.0),
    ("HasProperty", "tableware", "fragile", 4.0),
    ("HasProperty", "garlic", "pungent", 4.0),
    ("HasProperty", "onion", "pungent", 4.0),
    ("HasProperty", "salt", "salty", 4.0),
    ("HasProperty", "pepper", "spicy", 4.0),
    ("HasProperty", "sugar", "sweet", 4.0),
    ("HasProperty", "fat", "greasy", 4.0),
    ("HasProperty", "butter", "soft", 3.5),
    ("HasProperty", "flour", "white", 4.0),
    ("HasProperty", "egg", "fragile", 3.5),
    ("HasProperty", "spoon", "sweet", 0.5),
    ("HasProperty", "oven", "cold", 0.5),
    ("HasProperty", "salt", "sweet", 0.5),
    ("UsedFor", "cooking_utensil", "cook", 4.0),
    ("UsedFor", "kitchen_appliance", "cook", 4.0),
    ("UsedFor", "frying_pan", "fry", 4.0),
    ("UsedFor", "saucepan", "boil", 4.0),
    ("UsedFor", "stove", "heat", 2.0),
    ("UsedFor", "oven", "bake", 4.0),
    ("UsedFor", "knife", "cut", 4.0),
    ("UsedFor", "spoon", "stir", 4.0),
    ("UsedFor", "tableware", "serve", 4.0),
    ("UsedFor", "cup", "drink", 4.0),
    ("UsedFor", "flavorer", "season", 4.0),
    ("UsedFor", "fat", "fry", 3.5),
    ("UsedFor", "flour", "bake", 4.0),
    ("UsedFor", "sugar", "bake", 3.5),
    ("UsedFor", "egg", "bake", 3.5),
    ("UsedFor", "food", "eat", 4.0),
    ("UsedFor", "cup", "season", 0.5),
    ("UsedFor", "salt", "melt_ice", 2.0),
    ("UsedFor", "plate", "throwing_discs", 1.0),
    # laundry
    ("AtLocation", "white_goods", "laundry_room", 4.0),
    ("AtLocation", "iron", "laundry_room", 3.0),
    ("AtLocation", "detergent", "laundry_room", 4.0),
    ("AtLocation", "bleach", "laundry_room", 3.5),
    ("AtLocation", "basket", "laundry_room", 3.5),
    ("AtLocation", "sock", "dresser", 4.0),
    ("AtLocation", "glove", "dresser", 3.0),
    ("AtLocation", "sweater", "dresser", 3.5),
    ("AtLocation", "garment", "closet", 4.0),
    ("AtLocation", "hanger", "closet", 4.0),
    ("AtLocation", "towel", "bathroom", 4.0),
    ("AtLocation", "blanket", "bedroom", 4.0),
    ("AtLocation", "laundry_room", "house", 4.0),
    ("AtLocation", "dresser", "bedroom", 3.5),
    ("AtLocation", "dresser", "house", 3.0),
    ("AtLocation", "bedroom", "house", 4.0),
    ("AtLocation", "closet", "house", 4.0),
    ("AtLocation", "bathroom", "house", 4.0),
    ("AtLocation", "kitchen", "house", 4.0),
    ("AtLocation", "sock", "foot", 3.0),
    ("AtLocation", "shirt", "store", 2.0),
    ("AtLocation", "iron", "kitchen", 0.5),
    ("HasProperty", "white_goods", "heavy", 4.0),
    ("HasProperty", "iron", "hot", 4.0),
    ("HasProperty", "sweater", "warm", 4.0),
    ("HasProperty", "jacket", "warm", 4.0),
    ("HasProperty", "glove", "warm", 3.5),
    ("HasProperty", "blanket", "warm", 4.0),
    ("HasProperty", "blanket", "soft", 4.0),
    ("HasProperty", "towel", "absorbent", 4.0),
    ("HasProperty", "towel", "soft", 3.5),
    ("HasProperty", "sock", "soft", 3.0),
    ("HasProperty", "bleach", "toxic", 4.0),
    ("HasProperty", "detergent", "soapy", 4.0),
    ("HasProperty", "shirt", "edible", 0.5),
    ("HasProperty", "hanger", "wet", 0.5),
    ("UsedFor", "washer", "wash", 4.0),
    ("UsedFor", "dryer", "dry", 4.0),
    ("UsedFor", "iron", "press", 4.0),
    ("UsedFor", "clothing", "wear", 4.0),
    ("UsedFor", "detergent", "wash", 4.0),
    ("UsedFor", "bleach", "whiten", 4.0),
    ("UsedFor", "towel", "dry", 4.0),
    ("UsedFor", "basket", "carry", 4.0),
    ("UsedFor", "hanger", "hang", 4.0),
    ("UsedFor", "blanket", "cover", 3.5),
    ("UsedFor", "sock", "puppet", 0.5),
    # cleaning
    ("AtLocation", "broom", "closet", 4.0),
    ("AtLocation", "mop", "closet", 4.0),
    ("AtLocation", "bucket", "closet", 3.5),
    ("AtLocation", "vacuum", "closet", 4.0),
    ("AtLocation", "dustpan", "closet", 3.5),
    ("AtLocation", "sponge", "kitchen", 4.0),
    ("AtLocation", "paper_towel", "kitchen", 4.0),
    ("AtLocation", "soap", "bathroom", 4.0),
    ("AtLocation", "cleanser", "bathroom", 3.5),
    ("AtLocation", "cleanser", "cupboard", 3.0),
    ("AtLocation", "rag", "garage", 2.0),
    ("AtLocation", "brush", "office", 0.5),
    ("HasProperty", "sponge", "absorbent", 4.0),
    ("HasProperty", "rag", "absorbent", 3.5),
    ("HasProperty", "paper_towel", "absorbent", 4.0),
    ("HasProperty", "rag", "dirty", 3.5),
    ("HasProperty", "soap", "slippery", 4.0),
    ("HasProperty", "soap", "soapy", 4.0),
    ("HasProperty", "cleanser", "soapy", 3.0),
    ("HasProperty", "vacuum", "loud", 4.0),
    ("HasProperty", "mop", "wet", 3.5),
    ("HasProperty", "soap", "dramatic", 0.5),
    ("HasProperty", "bucket", "smelly", 0.5),
    ("UsedFor", "cleaning_implement", "clean", 4.0),
    ("UsedFor", "cleansing_agent", "clean", 4.0),
    ("UsedFor", "broom", "sweep", 4.0),
    ("UsedFor", "dustpan", "sweep", 3.0),
    ("UsedFor", "brush", "scrub", 4.0),
    ("UsedFor", "sponge", "scrub", 3.5),
    ("UsedFor", "sponge", "wipe", 3.5),
    ("UsedFor", "rag", "wipe", 4.0),
    ("UsedFor", "paper_towel", "wipe", 4.0),
    ("UsedFor", "vacuum", "clean", 4.0),
    ("UsedFor", "bucket", "carry", 4.0),
    ("UsedFor", "soap", "wash", 4.0),
    ("UsedFor", "mop", "clean", 4.0),
    ("UsedFor", "broom", "kill", 0.5),
]

# Edges whose start term carries a sense annotation: (relation, start, sense
# key, end, weight). A wrong sense is dropped by the start-sense filter.
SENSED_EDGES = [
    ("AtLocation", "pan", "pan.god", "forest", 3.0),
    ("HasProperty", "broom", "broom.plant", "yellow", 3.0),
    ("UsedFor", "iron", "iron.club", "golf", 3.0),
    ("AtLocation", "sponge", "sponge.animal", "forest", 2.0),
    ("UsedFor", "knife", "knife.cutlery", "cut", 4.0),
]

# Non-English, other-relation, and malformed noise lines.
NOISE_LINES = [
    "/a/[/r/Antonym/,/c/en/hot/,/c/en/cold/]\t/r/Antonym\t/c/en/hot\t/c/en/cold\t{\"weight\": 2.0}",
    "/a/[/r/AtLocation/,/c/fr/poele/,/c/fr/cuisine/]\t/r/AtLocation\t/c/fr/poele\t/c/fr/cuisine\t{\"weight\": 2.0}",
    "/a/[/r/UsedFor/,/c/de/besen/,/c/de/fegen/]\t/r/UsedFor\t/c/de/besen\t/c/de/fegen\t{\"weight\": 2.0}",
    "/a/[/r/RelatedTo/,/c/en/pan/,/c/en/pot/]\t/r/RelatedTo\t/c/en/pan\t/c/en/pot\t{\"weight\": 1.0}",
    "/a/[/r/Synonym/,/c/en/sofa/,/c/en/couch/]\t/r/Synonym\t/c/en/sofa\t/c/en/couch\t{\"weight\": 1.0}",
    "/a/[/r/PartOf/,/c/en/blade/,/c/en/knife/]\t/r/PartOf\t/c/en/blade\t/c/en/knife\t{\"weight\": 1.0}",
    "/a/[/r/IsA/,/c/en/oven/,/c/en/appliance/]\t/r/IsA\t/c/en/oven\t/c/en/appliance\t{\"weight\": 2.0}",
    "/a/[/r/AtLocation/,/c/en/sock/]\t/r/AtLocation\t/c/en/sock\t{\"weight\": 1.0}",
    "/a/[/r/UsedFor/,/c/en/mop/,/c/en/clean/]\t/r/UsedFor\t/c/en/mop\t/c/en/clean\t{not json}",
    "/a/[/r/HasProperty/,/c/ja/neko/,/c/ja/kawaii/]\t/r/HasProperty\t/c/ja/neko\t/c/ja/kawaii\t{\"weight\": 3.0}",
    "/a/[/r/Desires/,/c/en/person/,/c/en/food/]\t/r/Desires\t/c/en/person\t/c/en/food\t{\"weight\": 2.0}",
    "/a/[/r/CapableOf/,/c/en/knife/,/c/en/cut/]\t/r/CapableOf\t/c/en/knife\t/c/en/cut\t{\"weight\": 2.0}",
    "/a/[/r/AtLocation/,/c/en/sweater/,/c/en/winter_closet_shelf/]\t/r/AtLocation\t/c/en/sweater\t/c/en/winter_closet_shelf\t{\"weight\": 1.0}",
]

SCENARIOS = {
    "recipe": {
        "environment": "kitchen",
        "seeds": ["pan", "stove", "garlic", "onion", "saucepan", "frying_pan", "knife", "spoon",
                  "bowl", "oven", "salt", "pepper", "oil", "butter", "flour", "egg", "sugar",
                  "cup", "plate"],
        "senses": {"pan": "pan.cooking", "stove": "stove.kitchen", "garlic": "garlic",
                   "onion": "onion.bulb", "saucepan": "saucepan", "frying_pan": "frying_pan",
                   "knife": "knife.cutlery", "spoon": "spoon", "bowl": "bowl.dish",
                   "oven": "oven", "salt": "salt.table", "pepper": "pepper.spice",
                   "oil": "oil.cooking", "butter": "butter", "flour": "flour",
                   "egg": "egg.food", "sugar": "sugar.table", "cup": "cup.dish",
                   "plate": "plate.dish"},
    },
    "laundry": {
        "environment": "house",
        "seeds": ["washer", "dryer", "sock", "shirt", "towel", "detergent", "basket", "iron",
                  "hanger", "trousers", "jacket", "bleach", "blanket", "sweater", "glove"],
        "senses": {"washer": "washer.machine", "dryer": "dryer.machine", "sock": "sock",
                   "shirt": "shirt", "towel": "towel.cloth", "detergent": "detergent",
                   "basket": "basket.container", "iron": "iron.appliance",
                   "hanger": "hanger.device", "trousers": "trousers",
                   "jacket": "jacket.garment", "bleach": "bleach", "blanket": "blanket.bed",
                   "sweater": "sweater.garment", "glove": "glove.handwear"},
    },
    "cleaning": {
        "environment": "house",
        "seeds": ["rag", "soap", "paper_towel", "broom", "mop", "sponge", "bucket", "vacuum",
                  "brush", "dustpan", "cleanser"],
        "senses": {"rag": "rag.cloth", "soap": "soap.agent", "paper_towel": "paper_towel",
                   "broom": "broom.implement", "mop": "mop.implement",
                   "sponge": "sponge.implement", "bucket": "bucket.vessel",
                   "vacuum": "vacuum.cleaner", "brush": "brush.implement",
                   "dustpan": "dustpan", "cleanser": "cleanser"},
    },
}

# Small seed sets for exhaustive disambiguation checks.
SMALL_SEED_SETS = {
    "kitchen_trio": ["pan", "stove", "garlic"],
    "laundry_four": ["washer", "iron", "sock", "detergent"],
    "cleaning_five": ["broom", "vacuum", "sponge", "bucket", "soap"],
    "mixed_four": ["plate", "cup", "salt", "knife"],
    "garment_three": ["jacket", "sweater", "glove"],
}


def parse_taxonomy():
    synsets = {}
    order = []
    for raw in TAXONOMY.strip().splitlines():
        line = raw.strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split("|")]
        key, lemmas, hypers, gloss = parts[:4]
        parts_of = [p.strip() for p in parts[4].split(",")] if len(parts) > 4 else []
        if key in synsets:
            continue  # repeated definition for readability
        synsets[key] = {
            "key": key,
            "lemmas": [l.strip() for l in lemmas.split(",")],
            "hypernyms": [] if hypers == "-" else [h.strip() for h in hypers.split(",")],
            "gloss": gloss,
            "meronyms": parts_of,
        }
        order.append(key)
    for i, key in enumerate(order):
        synsets[key]["offset"] = "%08d" % (100000 + 1000 * i)
        synsets[key]["id"] = synsets[key]["offset"] + "-n"
    for key in order:
        for h in synsets[key]["hypernyms"] + synsets[key]["meronyms"]:
            if h not in synsets:
                raise SystemExit("unknown synset key " + h + " in " + key)
    return synsets, order


def sense_index(synsets, order):
    index = {}
    for key in order:
        for lemma in synsets[key]["lemmas"]:
            index.setdefault(lemma.lower(), []).append(key)
    for lemma, keys in SENSE_ORDER.items():
        assert sorted(keys) == sorted(index[lemma]), lemma
        index[lemma] = list(keys)
    return index


def write_lexicon(synsets, order, out_dir):
    os.makedirs(out_dir, exist_ok=True)
    hyponyms = {k: [] for k in order}
    holonyms = {k: [] for k in order}
    for key in order:
        for h in synsets[key]["hypernyms"]:
            hyponyms[h].append(key)
        for m in synsets[key]["meronyms"]:
            holonyms[m].append(key)
    header = "  1 This miniature lexicon is a bundled test fixture in the WordNet database layout.\n"
    with open(os.path.join(out_dir, "data.noun"), "w") as f:
        f.write(header)
        for key in order:
            s = synsets[key]
            ptrs = [("@", h) for h in s["hypernyms"]] + [("~", h) for h in hyponyms[key]]
            ptrs += [("%p", m) for m in s["meronyms"]] + [("#p", h) for h in holonyms[key]]
            words = " ".join("%s 0" % l for l in s["lemmas"])
            ptr_text = " ".join("%s %s n 0000" % (sym, synsets[t]["offset"]) for sym, t in ptrs)
            f.write("%s 06 n %02x %s %03d %s | %s\n" % (
                s["offset"], len(s["lemmas"]), words, len(ptrs), ptr_text, s["gloss"]))
    index = sense_index(synsets, order)
    with open(os.path.join(out_dir, "index.noun"), "w") as f:
        f.write(header)
        for lemma in sorted(index):
            keys = index[lemma]
            f.write("%s n %d 0 %d 0 %s\n" % (
                lemma, len(keys), len(keys), " ".join(synsets[k]["offset"] for k in keys)))
    return index


def write_corpus(synsets, order, path):
    counts = {}
    for key in order:
        for lemma in synsets[key]["lemmas"]:
            counts.setdefault(lemma.lower(), 50)
    counts.update(RARE_COUNTS)
    counts.update(FREQUENT)
    used = sum(counts.values())
    counts["<other>"] = TOTAL_TOKENS - used
    with open(path, "w") as f:
        f.write("# word<TAB>count\n")
        for word in sorted(counts):
            if word == "<other>":
                continue
            f.write("%s\t%d\n" % (word, counts[word]))
        f.write("the\t%d\n" % counts["<other>"])


def concept_uri(term, sense_offset=None):
    uri = "/c/en/" + term
    if sense_offset:
        uri += "/n/" + sense_offset + "-n"
    return uri


def write_edges(synsets, path):
    lines = []
    for rel, start, end, weight in EDGES:
        s, e = concept_uri(start), concept_uri(end)
        lines.append("/a/[/r/%s/,%s/,%s/]\t/r/%s\t%s\t%s\t%s" % (
            rel, s, e, rel, s, e, json.dumps({"dataset": "/d/fixture", "weight": weight})))
    for rel, start, key, end, weight in SENSED_EDGES:
        s, e = concept_uri(start, synsets[key]["offset"]), concept_uri(end)
        lines.append("/a/[/r/%s/,%s/,%s/]\t/r/%s\t%s\t%s\t%s" % (
            rel, s, e, rel, s, e, json.dumps({"dataset": "/d/fixture", "weight": weight})))
    # Non-English copies that ingestion must drop.
    for i, (rel, start, end, weight) in enumerate(EDGES[:40]):
        lang = ("fr", "es", "de")[i % 3]
        s, e = "/c/%s/%s" % (lang, start), "/c/%s/%s" % (lang, end)
        lines.append("/a/[/r/%s/,%s/,%s/]\t/r/%s\t%s\t%s\t%s" % (
            rel, s, e, rel, s, e, json.dumps({"dataset": "/d/fixture", "weight": weight})))
    rng = random.Random(7)
    for line in NOISE_LINES:
        lines.insert(rng.randrange(len(lines) + 1), line)
    with open(path, "w") as f:
        f.write("# assertion\trelation\tstart\tend\tmetadata\n")
        for line in lines:
            f.write(line + "\n")


def write_scenarios(synsets, data_dir):
    common = os.path.join(data_dir, "common.conf")
    with open(common, "w") as f:
        f.write("# Shared inputs and parameters for the bundled scenarios.\n"
                "lexicon = lexicon\nedges = edges.tsv\ncorpus = corpus_freq.tsv\n"
                "stopwords = stopwords.txt\nesa_corpus = esa_corpus.tsv\n"
                "min_children = 2\nic_threshold = 5.0\nalpha = 0.5\npseudocount = 1\n"
                "n_worlds = 20000\nmethod = lw\nsamples = 20000\nburn_in = 2000\nseed = 42\n")
    for name, sc in SCENARIOS.items():
        d = os.path.join(data_dir, "scenarios", name)
        os.makedirs(d, exist_ok=True)
        with open(os.path.join(d, "seeds.txt"), "w") as f:
            f.write("# %s scenario seed words\n" % name)
            for s in sc["seeds"]:
                f.write(s + "\n")
        with open(os.path.join(d, "scenario.conf"), "w") as f:
            f.write("include = ../../common.conf\nname = %s\nseeds = seeds.txt\ngold = gold.tsv\n"
                    "environment = %s\n" % (name, sc["environment"]))
        with open(os.path.join(d, "senses.tsv"), "w") as f:
            f.write("# seed<TAB>intended synset\n")
            for s in sc["seeds"]:
                f.write("%s\t%s\n" % (s, synsets[sc["senses"][s]]["id"]))
    d = os.path.join(data_dir, "seedsets")
    os.makedirs(d, exist_ok=True)
    for name, seeds in SMALL_SEED_SETS.items():
        with open(os.path.join(d, name + ".txt"), "w") as f:
            f.write("\n".join(seeds) + "\n")


def main():
    synsets, order = parse_taxonomy()
    os.makedirs(DATA, exist_ok=True)
    write_lexicon(synsets, order, os.path.join(DATA, "lexicon"))
    write_corpus(synsets, order, os.path.join(DATA, "corpus_freq.tsv"))
    with open(os.path.join(DATA, "stopwords.txt"), "w") as f:
        f.write("\n".join(STOPWORDS) + "\n")
    with open(os.path.join(DATA, "esa_corpus.tsv"), "w") as f:
        f.write("# title<TAB>text\n")
        for title, text in ESA_DOCS:
            f.write("%s\t%s\n" % (title, text))
    write_edges(synsets, os.path.join(DATA, "edges.tsv"))
    write_scenarios(synsets, DATA)
    print("synsets", len(order), "esa documents", len(ESA_DOCS))


if __name__ == "__main__":
    main()
